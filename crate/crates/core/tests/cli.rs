use std::fs;
use std::path::Path;

use heat1d::cli::run;
use heat1d::io::parse_timeseries_csv;
use heat1d::TemperatureField;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn heat1d(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("heat1d").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn frames_of(path: &Path) -> (Vec<f64>, Vec<TemperatureField>) {
    parse_timeseries_csv(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn simulate_copper_towards_linear_profile() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("out.svg");
    let csv = dir.path().join("out.csv");
    let o = heat1d(&[
        "simulate",
        "--material",
        "copper",
        "--bc-left",
        "dirichlet:0",
        "--bc-right",
        "dirichlet:50",
        "--svg",
        svg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.starts_with("lambda=0.4"), "{}", o.stdout);
    assert!(o.stdout.contains("stability=Stable"));
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<polyline").count(), 10);

    let (xs, frames) = frames_of(&csv);
    let last = frames.last().unwrap();
    // ceil(t_end / dt) steps: the final frame lands within one step past t_end
    let dt = 0.4 / (4.1 / (8.96 * 0.376));
    assert!(
        last.time >= 6000.0 && last.time < 6000.0 + dt,
        "{}",
        last.time
    );
    for (x, v) in xs.iter().zip(&last.values) {
        assert!((v - 0.5 * x).abs() < 0.5, "x={x} v={v}");
    }
}

#[test]
fn simulate_unknown_material() {
    let o = heat1d(&["simulate", "--material", "unknownium"]);
    assert_eq!(o.code, 2);
    for key in ["aluminium", "copper", "mild-steel"] {
        assert!(o.stderr.contains(key), "{}", o.stderr);
    }
}

#[test]
fn simulate_unstable_exits_three() {
    let alpha = heat1d::builtin_material("aluminium").unwrap().diffusivity();
    let dt = format!("{}", 0.6 / alpha);
    let o = heat1d(&["simulate", "--material", "aluminium", "--dt", &dt]);
    assert_eq!(o.code, 3, "{}", o.stderr);
    assert!(o.stdout.contains("stability=Unstable"), "{}", o.stdout);
    assert!(o.stdout.contains("steady_time=none"));
    assert!(o.stderr.contains("diverged"));
}

#[test]
fn simulate_writes_frames_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = |d: &Path| {
        vec![
            "simulate".to_string(),
            "--material".into(),
            "aluminium".into(),
            "--length".into(),
            "10".into(),
            "--nodes".into(),
            "11".into(),
            "--t-end".into(),
            "50".into(),
            "--sample-every".into(),
            "20".into(),
            "--frames".into(),
            d.join("frames").to_string_lossy().into_owned(),
            "--csv".into(),
            d.join("ts.csv").to_string_lossy().into_owned(),
            "--svg".into(),
            d.join("p.svg").to_string_lossy().into_owned(),
        ]
    };
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    fs::create_dir_all(&a).unwrap();
    fs::create_dir_all(&b).unwrap();
    let oa = heat1d(&args(&a).iter().map(String::as_str).collect::<Vec<_>>());
    let ob = heat1d(&args(&b).iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!((oa.code, ob.code), (0, 0));
    assert_eq!(oa.stdout, ob.stdout);
    for name in [
        "ts.csv",
        "p.svg",
        "frames/manifest.csv",
        "frames/frame_00000.csv",
    ] {
        assert_eq!(
            fs::read(a.join(name)).unwrap(),
            fs::read(b.join(name)).unwrap(),
            "{name}"
        );
    }
    let manifest = fs::read_to_string(a.join("frames/manifest.csv")).unwrap();
    let (_, frames) = frames_of(&a.join("ts.csv"));
    assert_eq!(manifest.lines().count(), frames.len() + 1);
    assert!(a
        .join(format!("frames/frame_{:05}.csv", frames.len() - 1))
        .exists());
}

const BASE_CONFIG: &str = "\
material = copper
rod.length = 10
grid.nodes = 11
time.dt = 0.1
time.end = 1
time.sample_every = 5
bc.left = dirichlet:0
bc.right = dirichlet:0
ic = uniform:0
steady.eps = 1e-4
";

/// Runs `simulate` on the base file plus `flags`, returning summary and frames.
fn with_base(config: &str, flags: &[&str]) -> (String, Vec<f64>, Vec<TemperatureField>) {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    let csv = dir.path().join("run.csv");
    fs::write(&cfg, config).unwrap();
    let mut args = vec![
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ];
    args.extend_from_slice(flags);
    let o = heat1d(&args);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let (xs, frames) = frames_of(&csv);
    (o.stdout, xs, frames)
}

#[test]
fn config_file_is_used() {
    let (summary, xs, frames) = with_base(BASE_CONFIG, &[]);
    assert!(summary.contains("steady_time=0.500"), "{summary}");
    assert_eq!(xs.len(), 11);
    assert_eq!(*xs.last().unwrap(), 10.0);
    assert_eq!(frames.len(), 3);
    assert_eq!(frames[1].time, 0.5);
}

#[test]
fn flag_material_wins() {
    let (summary, _, _) = with_base(BASE_CONFIG, &["--material", "aluminium"]);
    let lambda: f64 = summary.split_whitespace().next().unwrap()["lambda=".len()..]
        .parse()
        .unwrap();
    assert!(
        (lambda - 0.1 * 2.38 / (2.7 * 0.92)).abs() < 1e-12,
        "{summary}"
    );
}

#[test]
fn flag_length_wins() {
    let (_, xs, _) = with_base(BASE_CONFIG, &["--length", "20"]);
    assert_eq!(*xs.last().unwrap(), 20.0);
}

#[test]
fn flag_nodes_wins() {
    let (_, xs, _) = with_base(BASE_CONFIG, &["--nodes", "21"]);
    assert_eq!(xs.len(), 21);
}

#[test]
fn flag_dt_wins() {
    let (_, _, frames) = with_base(BASE_CONFIG, &["--dt", "0.05"]);
    assert_eq!(frames[1].time, 0.25);
}

#[test]
fn flag_t_end_wins() {
    let (_, _, frames) = with_base(BASE_CONFIG, &["--t-end", "2"]);
    assert!((frames.last().unwrap().time - 2.0).abs() < 1e-12);
}

#[test]
fn flag_sample_every_wins() {
    let (_, _, frames) = with_base(BASE_CONFIG, &["--sample-every", "2"]);
    assert!((frames[1].time - 0.2).abs() < 1e-15);
}

#[test]
fn flag_bc_left_wins() {
    let (_, _, frames) = with_base(BASE_CONFIG, &["--bc-left", "dirichlet:7"]);
    assert_eq!(frames[0].values[0], 7.0);
}

#[test]
fn flag_bc_right_wins() {
    let (_, _, frames) = with_base(BASE_CONFIG, &["--bc-right", "dirichlet:-9"]);
    assert_eq!(*frames[0].values.last().unwrap(), -9.0);
}

#[test]
fn flag_ic_wins() {
    let (_, _, frames) = with_base(BASE_CONFIG, &["--ic", "uniform:3"]);
    assert_eq!(frames[0].values[5], 3.0);
}

#[test]
fn flag_steady_eps_wins() {
    let config = BASE_CONFIG
        .replace("ic = uniform:0", "ic = spike:50@mid")
        .replace("steady.eps = 1e-4", "steady.eps = 1e-300");
    let (summary, _, _) = with_base(&config, &[]);
    assert!(summary.contains("steady_time=none"), "{summary}");
    let (summary, _, _) = with_base(&config, &["--steady-eps", "1e9"]);
    assert!(summary.contains("steady_time=0.500"), "{summary}");
}

#[test]
fn bad_config_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.conf");
    fs::write(&cfg, "material = copper\n\ngrid.nodes = 2\n").unwrap();
    let o = heat1d(&["simulate", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 3"), "{}", o.stderr);
    let o = heat1d(&[
        "simulate",
        "--config",
        dir.path().join("missing.conf").to_str().unwrap(),
    ]);
    assert_eq!(o.code, 2);
}

#[test]
fn compare_three_materials() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("table.csv");
    let o = heat1d(&[
        "compare",
        "--materials",
        "copper,aluminium,mild-steel",
        "--bc-right",
        "dirichlet:50",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let rows: Vec<Vec<&str>> = o
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(
        [rows[0][0], rows[1][0], rows[2][0]],
        ["copper", "aluminium", "mild-steel"]
    );
    assert_eq!(rows[2][3], ">t_end");
    let cu: f64 = rows[0][3].parse().unwrap();
    if let Ok(al) = rows[1][3].parse::<f64>() {
        assert!(cu < al);
    }
    let table = fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("material,alpha,lambda,steady_time\n"));
    assert_eq!(table.lines().count(), 4);
}

#[test]
fn compare_desk_scale_ordering() {
    let o = heat1d(&[
        "compare",
        "--materials",
        "mild-steel,aluminium,copper",
        "--length",
        "10",
        "--nodes",
        "11",
        "--bc-right",
        "dirichlet:50",
        "--t-end",
        "20000",
    ]);
    assert_eq!(o.code, 0);
    let times: Vec<f64> = o
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(3).unwrap().parse().unwrap())
        .collect();
    assert!(times[2] < times[1] && times[1] < times[0], "{times:?}");
}

#[test]
fn compare_single_and_invalid() {
    let o = heat1d(&[
        "compare",
        "--materials",
        "copper",
        "--length",
        "10",
        "--nodes",
        "11",
    ]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 2);
    assert_eq!(heat1d(&["compare", "--materials", ""]).code, 2);
    assert_eq!(heat1d(&["compare", "--materials", " , "]).code, 2);
    assert_eq!(
        heat1d(&["compare", "--materials", "copper,unobtainium"]).code,
        2
    );
    assert_eq!(heat1d(&["compare"]).code, 2);
}

#[test]
fn verify_default_passes() {
    let o = heat1d(&["verify"]);
    assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
    assert!(
        o.stdout.starts_with("equivalence: PASS (max "),
        "{}",
        o.stdout
    );
    assert!(o.stdout.contains("convergence: PASS (order "));
}

#[test]
fn verify_same_seed_same_output() {
    let a = heat1d(&["verify", "--seed", "42"]);
    let b = heat1d(&["verify", "--seed", "42"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    assert!(a.stdout.contains("seed=42"));
}

#[test]
fn verify_two_grids_warns() {
    let o = heat1d(&["verify", "--grids", "9,17"]);
    assert!(o.stderr.contains("two-point"), "{}", o.stderr);
    assert!(o.stdout.contains("order "));
    let single = heat1d(&["verify", "--grids", "17"]);
    assert_eq!(single.code, 1);
    assert_eq!(heat1d(&["verify", "--grids", "33,17"]).code, 1);
}

#[test]
fn stability_examples() {
    let o = heat1d(&[
        "stability",
        "--alpha",
        "1",
        "--length",
        "1",
        "--nodes",
        "3",
        "--dt",
        "0.125",
    ]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "lambda=0.5 verdict=Marginal\n");

    let o = heat1d(&[
        "stability",
        "--material",
        "aluminium",
        "--length",
        "100",
        "--nodes",
        "101",
        "--dt",
        "0.1",
    ]);
    assert_eq!(o.code, 0);
    let lambda: f64 = o.stdout.split_whitespace().next().unwrap()["lambda=".len()..]
        .parse()
        .unwrap();
    assert!((lambda - 0.0958132).abs() < 1e-6, "{}", o.stdout);
    assert!(o.stdout.contains("verdict=Stable"));
    assert!(!o.stdout.contains("max_stable_dt"));

    let o = heat1d(&[
        "stability",
        "--alpha",
        "1",
        "--length",
        "1",
        "--nodes",
        "3",
        "--dt",
        "0.25",
    ]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("verdict=Unstable"));
    assert!(o.stdout.contains("max_stable_dt=0.125"), "{}", o.stdout);
}

#[test]
fn stability_invalid_input() {
    assert_eq!(heat1d(&["stability", "--alpha", "1", "--dt", "-1"]).code, 2);
    assert_eq!(heat1d(&["stability", "--alpha", "0", "--dt", "1"]).code, 2);
    assert_eq!(
        heat1d(&["stability", "--alpha", "1", "--nodes", "2", "--dt", "1"]).code,
        2
    );
    assert_eq!(heat1d(&["stability", "--dt", "1"]).code, 2);
    assert_eq!(
        heat1d(&[
            "stability",
            "--material",
            "copper",
            "--alpha",
            "1",
            "--dt",
            "1"
        ])
        .code,
        2
    );
    assert_eq!(
        heat1d(&["stability", "--material", "lead", "--dt", "1"]).code,
        2
    );
}

#[test]
fn exit_codes_stay_in_contract() {
    for args in [
        vec![],
        vec!["frobnicate"],
        vec!["simulate"],
        vec!["simulate", "--material", "copper", "--nodes", "x"],
        vec!["--help"],
    ] {
        let code = heat1d(&args).code;
        assert!([0, 1, 2, 3].contains(&code), "{args:?} -> {code}");
    }
    assert_eq!(heat1d(&["--help"]).code, 0);
    assert_eq!(heat1d(&["simulate"]).code, 2);
}

#[test]
fn fixture_config_runs() {
    let cfg = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/aluminium_0_50.conf");
    let o = heat1d(&[
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--length",
        "10",
        "--nodes",
        "11",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(!o.stdout.contains("steady_time=none"), "{}", o.stdout);
}
