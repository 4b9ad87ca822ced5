use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{HeatError, Result};
use crate::grid::Grid1D;
use crate::simulate::SimulationResult;

use super::csv::format_number;

/// Writes each stored frame as `frame_<index:05>.csv` (`x,temperature`) and
/// a `manifest.csv` (`index,time`). Returns the written paths, manifest last.
pub fn write_frames(result: &SimulationResult, grid: &Grid1D, dir: &Path) -> Result<Vec<PathBuf>> {
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |source| HeatError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io_err(dir))?;

    let xs: Vec<String> = grid.positions().into_iter().map(format_number).collect();
    let mut written = Vec::with_capacity(result.frames.len() + 1);
    let mut manifest = String::from("index,time\n");
    for (idx, frame) in result.frames.iter().enumerate() {
        let mut body = String::from("x,temperature\n");
        for (x, v) in xs.iter().zip(&frame.values) {
            let _ = writeln!(body, "{x},{}", format_number(*v));
        }
        let path = dir.join(format!("frame_{idx:05}.csv"));
        fs::write(&path, body).map_err(io_err(&path))?;
        written.push(path);
        let _ = writeln!(manifest, "{idx},{}", format_number(frame.time));
    }
    let path = dir.join("manifest.csv");
    fs::write(&path, manifest).map_err(io_err(&path))?;
    written.push(path);
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::TemperatureField;
    use crate::stability::Stability;

    fn result(times: &[f64]) -> SimulationResult {
        SimulationResult {
            frames: times
                .iter()
                .map(|&t| TemperatureField::new(vec![t; 3], t))
                .collect(),
            dt: 0.1,
            lambda: 0.2,
            stability: Stability::Stable,
            steady_time: None,
            diverged_at: None,
        }
    }

    #[test]
    fn naming_and_manifest() {
        let dir = tempfile::tempdir().unwrap();
        let g = Grid1D::new(1.0, 3).unwrap();
        let times = [0.0, 0.1, 0.30000000000000004];
        let files = write_frames(&result(&times), &g, dir.path()).unwrap();
        let names: Vec<String> = files
            .iter()
            .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
            .collect();
        assert_eq!(
            names,
            [
                "frame_00000.csv",
                "frame_00001.csv",
                "frame_00002.csv",
                "manifest.csv"
            ]
        );
        let manifest = fs::read_to_string(dir.path().join("manifest.csv")).unwrap();
        let parsed: Vec<f64> = manifest
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        assert_eq!(parsed, times);
        let frame = fs::read_to_string(dir.path().join("frame_00001.csv")).unwrap();
        assert_eq!(frame, "x,temperature\n0,0.1\n0.5,0.1\n1,0.1\n");
    }

    #[test]
    fn empty_result_writes_manifest_only() {
        let dir = tempfile::tempdir().unwrap();
        let g = Grid1D::new(1.0, 3).unwrap();
        let files = write_frames(&result(&[]), &g, dir.path()).unwrap();
        assert_eq!(files.len(), 1);
        assert_eq!(fs::read_to_string(&files[0]).unwrap(), "index,time\n");
    }

    #[test]
    fn unwritable_target() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "x").unwrap();
        let g = Grid1D::new(1.0, 3).unwrap();
        let err = write_frames(&result(&[0.0]), &g, &blocker.join("sub")).unwrap_err();
        assert!(matches!(err, HeatError::Io { .. }));
    }
}
