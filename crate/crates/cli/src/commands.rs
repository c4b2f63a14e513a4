use std::f64::consts::PI;
use std::fs::{self, File};
use std::io::{BufReader, Read, Write};
use std::path::{Path, PathBuf};

use serde::Deserialize;
use swchan_core::{
    combined_path_loss, path_loss_sffl, standing_wave_gain_db, standing_wave_magnitude_sq,
    AntennaSpec, ChannelModel, ComplexReflection, Frequency, MeasurementSet, SfflParams,
    StandingWaveParams,
};
use swchan_fit::{fit_channel, fit_sffl_ols, FitConfig, FitReport};
use swchan_synth::{
    generate_measurements, oracle_standing_wave, Complex64, DistanceGrid, SynthConfig,
};

use crate::args::{Command, ExportArgs, FitArgs, PredictArgs, SimulateArgs};
use crate::campaign::{read_campaign, to_measurements, write_measurements, LinkBudget};
use crate::error::{data, io_error, usage, CliResult};
use crate::format::fmt_g9;
use crate::report::ReportFile;

/// Standard streams of one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
}

pub fn run(command: &Command, io: &mut Io) -> CliResult<()> {
    match command {
        Command::Fit(a) => fit(a, io),
        Command::Predict(a) => predict(a, io),
        Command::Simulate(a) => simulate(a, io),
        Command::ExportStandingWave(a) => export_standing_wave(a, io),
    }
}

fn fit(a: &FitArgs, io: &mut Io) -> CliResult<()> {
    check_d0(a.d0)?;
    let cfg = match &a.config {
        Some(path) => load_config(path)?,
        None => FitConfig::default(),
    };
    let budget = LinkBudget {
        tx_power_dbm: a.tx_power_dbm,
        tx: a.tx_antenna.as_deref().map(load_antenna).transpose()?,
        rx: a.rx_antenna.as_deref().map(load_antenna).transpose()?,
    };
    let raw = if a.input == "-" {
        read_campaign(&mut *io.stdin)?
    } else {
        let f = File::open(&a.input).map_err(|e| io_error(&a.input, e))?;
        read_campaign(BufReader::new(f))?
    };
    let m = to_measurements(&raw, a.d0, &budget)?;
    let report = fit_channel(&m, &cfg).map_err(|e| data(e.to_string()))?;
    write_output(
        io,
        a.output.as_deref(),
        ReportFile::from_fit(&report).to_json(),
    )?;
    if let Some(dir) = &a.curves {
        write_curves(dir, &m, &report, a.curve_points)?;
    }
    Ok(())
}

fn write_curves(dir: &Path, m: &MeasurementSet, r: &FitReport, points: usize) -> CliResult<()> {
    if points < 2 {
        return Err(usage("--curve-points must be at least 2"));
    }
    fs::create_dir_all(dir).map_err(|e| io_error(&dir.display().to_string(), e))?;
    let plain = fit_sffl_ols(m).map_err(|e| data(e.to_string()))?;
    let model_err = |e: swchan_core::Error| data(e.to_string());

    let (lo, hi) = (
        m.samples()[0].distance_m,
        m.samples()[m.len() - 1].distance_m,
    );
    let mut curve = String::from("distance_m,path_loss_sffl_db,path_loss_combined_db\n");
    for i in 0..points {
        let d = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        curve += &format!(
            "{},{},{}\n",
            fmt_g9(d),
            fmt_g9(path_loss_sffl(&plain, d).map_err(model_err)?),
            fmt_g9(combined_path_loss(&r.model, d).map_err(model_err)?)
        );
    }

    let mut resid =
        String::from("distance_m,measured_path_loss_db,residual_sffl_db,residual_combined_db\n");
    for s in m.samples() {
        let d = s.distance_m;
        resid += &format!(
            "{},{},{},{}\n",
            fmt_g9(d),
            fmt_g9(s.path_loss_db),
            fmt_g9(path_loss_sffl(&plain, d).map_err(model_err)? - s.path_loss_db),
            fmt_g9(combined_path_loss(&r.model, d).map_err(model_err)? - s.path_loss_db)
        );
    }
    write_file(&dir.join("curve.csv"), curve)?;
    write_file(&dir.join("residuals.csv"), resid)
}

fn predict(a: &PredictArgs, io: &mut Io) -> CliResult<()> {
    let path = a.model.display().to_string();
    let text = fs::read_to_string(&a.model).map_err(|e| io_error(&path, e))?;
    let report = ReportFile::parse(&text).map_err(|e| data(format!("{path}: {e}")))?;
    let model = report.model().map_err(|e| data(format!("{path}: {e}")))?;
    let budget = LinkBudget {
        tx_power_dbm: Some(a.tx_power_dbm),
        tx: a.tx_antenna.as_deref().map(load_antenna).transpose()?,
        rx: a.rx_antenna.as_deref().map(load_antenna).transpose()?,
    };
    let gains = budget.antenna_gain_db(model.frequency.ghz())?;
    let distances = distances(a.grid.as_deref(), a.distances.as_deref(), None)?;

    let mut out = String::from("distance_m,path_loss_db,received_power_dbm\n");
    for d in distances {
        let pl = combined_path_loss(&model, d).map_err(|e| usage(e.to_string()))?;
        out += &format!(
            "{},{},{}\n",
            fmt_g9(d),
            fmt_g9(pl),
            fmt_g9(a.tx_power_dbm + gains - pl)
        );
    }
    write_output(io, a.output.as_deref(), out)
}

fn simulate(a: &SimulateArgs, io: &mut Io) -> CliResult<()> {
    check_d0(a.d0)?;
    if a.sigma > 0.0 && a.seed.is_none() {
        return Err(usage(
            "--sigma > 0 needs --seed for a reproducible campaign",
        ));
    }
    let invalid = |e: swchan_core::Error| usage(e.to_string());
    let model = ChannelModel::new(
        Frequency::new(a.frequency).map_err(invalid)?,
        SfflParams::new(a.alpha, a.beta, a.sigma, a.d0).map_err(invalid)?,
        StandingWaveParams::new(parse_gamma(&a.gamma)?, a.k.unwrap_or(10.0 * PI))
            .map_err(invalid)?,
    );
    let grid = match &a.grid {
        Some(g) => parse_grid(g)?,
        None => DistanceGrid::bench(),
    };
    let config = SynthConfig::new(model)
        .with_grid(grid)
        .with_noise(a.sigma, a.seed.unwrap_or(0));
    let m = generate_measurements(&config).map_err(|e| usage(e.to_string()))?;
    let mut buf = Vec::new();
    write_measurements(&mut buf, &m).expect("writing to memory");
    write_output(
        io,
        a.output.as_deref(),
        String::from_utf8(buf).expect("ASCII output"),
    )
}

fn export_standing_wave(a: &ExportArgs, io: &mut Io) -> CliResult<()> {
    if !(a.d0.is_finite() && a.d0 >= 0.0) {
        return Err(usage(format!("--d0 = {} must be non-negative", a.d0)));
    }
    let k = a.k.unwrap_or(2.0 * PI);
    let distances = distances(a.grid.as_deref(), a.distances.as_deref(), Some("0:2:0.005"))?;
    let invalid = |e: swchan_core::Error| usage(e.to_string());
    let one = Complex64::new(1.0, 0.0);

    let mut out =
        String::from("gamma_mag,gamma_phase_deg,distance_m,v_net_magnitude,magnitude_sq,gain_db\n");
    for text in &a.gamma {
        let gamma = parse_gamma(text)?;
        let s = StandingWaveParams::new(gamma, k).map_err(invalid)?;
        for &d in &distances {
            let (v, _) = oracle_standing_wave(&gamma, k, d, a.d0, one);
            out += &format!(
                "{},{},{},{},{},{}\n",
                fmt_g9(gamma.magnitude()),
                fmt_g9(gamma.phase_rad().to_degrees()),
                fmt_g9(d),
                fmt_g9(v.norm()),
                fmt_g9(standing_wave_magnitude_sq(&s, d, a.d0).map_err(invalid)?),
                fmt_g9(standing_wave_gain_db(&s, d, a.d0).map_err(invalid)?)
            );
        }
    }
    write_output(io, a.output.as_deref(), out)
}

fn check_d0(d0: f64) -> CliResult<()> {
    if d0.is_finite() && d0 > 0.0 {
        Ok(())
    } else {
        Err(usage(format!("--d0 = {d0} must be positive")))
    }
}

/// `mag:phase_deg`, or a bare magnitude with zero phase.
pub fn parse_gamma(text: &str) -> CliResult<ComplexReflection> {
    let bad = || usage(format!("--gamma '{text}': expected mag:phase_deg"));
    let (mag, deg) = match text.split_once(':') {
        Some((m, p)) => (m, p),
        None => (text, "0"),
    };
    let mag: f64 = mag.trim().parse().map_err(|_| bad())?;
    let deg: f64 = deg.trim().parse().map_err(|_| bad())?;
    if !deg.is_finite() {
        return Err(bad());
    }
    ComplexReflection::new(mag, deg.to_radians())
        .map_err(|e| usage(format!("--gamma '{text}': {e}")))
}

/// `start:stop:step`, stop inclusive.
pub fn parse_grid(text: &str) -> CliResult<DistanceGrid> {
    let parts: Vec<&str> = text.split(':').collect();
    let nums: Option<Vec<f64>> = parts.iter().map(|p| p.trim().parse().ok()).collect();
    match nums.as_deref() {
        Some(&[start_m, stop_m, step_m]) => Ok(DistanceGrid::Range {
            start_m,
            stop_m,
            step_m,
        }),
        _ => Err(usage(format!("--grid '{text}': expected start:stop:step"))),
    }
}

fn distances(
    grid: Option<&str>,
    list: Option<&[f64]>,
    default: Option<&str>,
) -> CliResult<Vec<f64>> {
    let grid = match (grid, list) {
        (Some(g), _) => parse_grid(g)?,
        (None, Some(l)) => DistanceGrid::Explicit(l.to_vec()),
        (None, None) => parse_grid(default.ok_or_else(|| usage("no distances given"))?)?,
    };
    grid.distances().map_err(|e| usage(e.to_string()))
}

fn load_config(path: &Path) -> CliResult<FitConfig> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{name}: {e}")))?;
    let cfg: FitConfig = serde_json::from_str(&text).map_err(|e| usage(format!("{name}: {e}")))?;
    cfg.validate().map_err(|e| usage(format!("{name}: {e}")))?;
    Ok(cfg)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AntennaFile {
    band_name: String,
    band_low_ghz: f64,
    band_high_ghz: f64,
    half_power_beamwidth_deg: f64,
    gain_dbi: f64,
    beam_waist_radius_mm: f64,
}

/// A preset name, or else a JSON file with the `AntennaSpec` fields.
pub fn load_antenna(name: &str) -> CliResult<AntennaSpec> {
    if let Some(a) = AntennaSpec::preset(name) {
        return Ok(a);
    }
    let path = PathBuf::from(name);
    if !path.is_file() {
        let presets: Vec<String> = AntennaSpec::presets()
            .iter()
            .map(|a| a.band_name().to_string())
            .collect();
        return Err(usage(format!(
            "unknown antenna '{name}': not a preset ({}) or a readable spec file",
            presets.join(", ")
        )));
    }
    let text = fs::read_to_string(&path).map_err(|e| usage(format!("{name}: {e}")))?;
    let f: AntennaFile = serde_json::from_str(&text).map_err(|e| usage(format!("{name}: {e}")))?;
    AntennaSpec::new(
        f.band_name,
        f.band_low_ghz,
        f.band_high_ghz,
        f.half_power_beamwidth_deg,
        f.gain_dbi,
        f.beam_waist_radius_mm,
    )
    .map_err(|e| usage(format!("{name}: {e}")))
}

fn write_file(path: &Path, text: String) -> CliResult<()> {
    fs::write(path, text).map_err(|e| io_error(&path.display().to_string(), e))
}

fn write_output(io: &mut Io, path: Option<&Path>, text: String) -> CliResult<()> {
    match path {
        Some(p) => write_file(p, text),
        None => io
            .stdout
            .write_all(text.as_bytes())
            .and_then(|_| io.stdout.flush())
            .map_err(|e| io_error("stdout", e)),
    }
}
