//! Configuration parsing and file output.

mod config;
mod csv;
mod frames;
mod svg;

pub use config::{parse_config, ConfigDocument, Entry, KEYS};
pub use csv::{
    format_number, parse_timeseries_csv, save_timeseries_csv, write_timeseries_csv,
    TIMESERIES_HEADER,
};
pub use frames::write_frames;
pub use svg::render_svg_profile;
