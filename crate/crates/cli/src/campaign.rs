//! Campaign CSV files: one row per measured distance.
//!
//! Accepted headers:
//!
//! - `frequency_ghz,distance_m,path_loss_db`
//! - `frequency_ghz,distance_m,received_power_dbm`, converted with
//!   `PL = P_tx + G_tx + G_rx - P_rx`
//! - `sweep_frequency_ghz,distance_m,s21_db`, one row per swept frequency
//!   point; each distance becomes `PL = -mean(s21_db)` and the campaign
//!   frequency is the middle of the swept range

use std::io::{Read, Write};

use swchan_core::{AntennaSpec, Frequency, MeasurementSet, Sample, MIN_SAMPLES};

use crate::error::{data, usage, CliResult};
use crate::format::fmt_g9;

pub const PATH_LOSS_HEADER: [&str; 3] = ["frequency_ghz", "distance_m", "path_loss_db"];
pub const RECEIVED_POWER_HEADER: [&str; 3] = ["frequency_ghz", "distance_m", "received_power_dbm"];
pub const SWEEP_HEADER: [&str; 3] = ["sweep_frequency_ghz", "distance_m", "s21_db"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    PathLoss,
    ReceivedPower,
    Sweep,
}

/// Parsed rows before any unit conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct RawCampaign {
    pub convention: Convention,
    /// `(frequency_ghz, distance_m, value)` in file order.
    pub rows: Vec<(f64, f64, f64)>,
}

/// Transmit power and antenna gains for received-power input.
#[derive(Debug, Clone, Default)]
pub struct LinkBudget {
    pub tx_power_dbm: Option<f64>,
    pub tx: Option<AntennaSpec>,
    pub rx: Option<AntennaSpec>,
}

impl LinkBudget {
    /// `G_tx + G_rx`, after checking both antennas cover `frequency_ghz`.
    /// A missing antenna counts as 0 dBi.
    pub fn antenna_gain_db(&self, frequency_ghz: f64) -> CliResult<f64> {
        let mut total = 0.0;
        for a in [&self.tx, &self.rx].into_iter().flatten() {
            a.check_band(frequency_ghz)
                .map_err(|e| usage(e.to_string()))?;
            total += a.gain_dbi();
        }
        Ok(total)
    }
}

pub fn read_campaign(input: impl Read) -> CliResult<RawCampaign> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(input);
    let header = reader
        .headers()
        .map_err(|e| data(format!("cannot read header: {e}")))?
        .clone();
    let names: Vec<&str> = header.iter().collect();
    let convention = match names.as_slice() {
        n if n == PATH_LOSS_HEADER => Convention::PathLoss,
        n if n == RECEIVED_POWER_HEADER => Convention::ReceivedPower,
        n if n == SWEEP_HEADER => Convention::Sweep,
        _ => {
            return Err(data(format!(
                "line 1: unrecognized header '{}'; expected '{}', '{}' or '{}'",
                names.join(","),
                PATH_LOSS_HEADER.join(","),
                RECEIVED_POWER_HEADER.join(","),
                SWEEP_HEADER.join(",")
            )))
        }
    };

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| data(format!("malformed CSV: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != 3 {
            return Err(data(format!(
                "line {line}: expected 3 fields, found {}",
                record.len()
            )));
        }
        let mut v = [0.0; 3];
        for (i, field) in record.iter().enumerate() {
            v[i] = field
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| {
                    data(format!(
                        "line {line}: field '{}' = '{field}' is not a finite number",
                        &header[i]
                    ))
                })?;
        }
        rows.push((v[0], v[1], v[2]));
    }
    Ok(RawCampaign { convention, rows })
}

fn single_frequency(rows: &[(f64, f64, f64)]) -> CliResult<f64> {
    let mut found: Vec<f64> = Vec::new();
    for r in rows {
        if !found.contains(&r.0) {
            found.push(r.0);
        }
    }
    match found.as_slice() {
        [f] => Ok(*f),
        _ => Err(data(format!(
            "mixed frequencies: found {} GHz; fit one frequency per file",
            found
                .iter()
                .map(|f| fmt_g9(*f))
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

/// Mean `-S21` per distance, in order of first appearance.
fn band_average(rows: &[(f64, f64, f64)]) -> Vec<(f64, f64)> {
    let mut groups: Vec<(f64, f64, usize)> = Vec::new();
    for &(_, d, s21) in rows {
        match groups.iter_mut().find(|g| g.0 == d) {
            Some(g) => {
                g.1 += s21;
                g.2 += 1;
            }
            None => groups.push((d, s21, 1)),
        }
    }
    groups
        .into_iter()
        .map(|(d, sum, n)| (d, -sum / n as f64))
        .collect()
}

/// Converts to path loss and builds a distance-sorted measurement set.
pub fn to_measurements(
    raw: &RawCampaign,
    d0_m: f64,
    budget: &LinkBudget,
) -> CliResult<MeasurementSet> {
    let (frequency_ghz, points) = match raw.convention {
        Convention::Sweep => {
            let lo = raw.rows.iter().map(|r| r.0).fold(f64::INFINITY, f64::min);
            let hi = raw
                .rows
                .iter()
                .map(|r| r.0)
                .fold(f64::NEG_INFINITY, f64::max);
            (0.5 * (lo + hi), band_average(&raw.rows))
        }
        Convention::PathLoss => (
            single_frequency(&raw.rows)?,
            raw.rows.iter().map(|r| (r.1, r.2)).collect(),
        ),
        Convention::ReceivedPower => {
            let f = single_frequency(&raw.rows)?;
            let tx = budget
                .tx_power_dbm
                .ok_or_else(|| usage("received_power_dbm input needs --tx-power-dbm"))?;
            let gains = budget.antenna_gain_db(f)?;
            (
                f,
                raw.rows.iter().map(|r| (r.1, tx + gains - r.2)).collect(),
            )
        }
    };
    if points.len() < MIN_SAMPLES {
        return Err(data(format!(
            "insufficient samples: found {}, need at least {MIN_SAMPLES}",
            points.len()
        )));
    }
    let mut samples: Vec<Sample> = points
        .into_iter()
        .map(|(d, pl)| Sample::new(d, pl))
        .collect();
    samples.sort_by(|a, b| a.distance_m.total_cmp(&b.distance_m));
    if let Some(w) = samples
        .windows(2)
        .find(|w| w[0].distance_m == w[1].distance_m)
    {
        return Err(data(format!(
            "duplicate distance {} m",
            fmt_g9(w[0].distance_m)
        )));
    }
    let frequency = Frequency::new(frequency_ghz).map_err(|e| data(e.to_string()))?;
    MeasurementSet::new(frequency, samples, d0_m).map_err(|e| data(e.to_string()))
}

/// Writes `m` with the path-loss header.
pub fn write_measurements(out: &mut impl Write, m: &MeasurementSet) -> std::io::Result<()> {
    writeln!(out, "{}", PATH_LOSS_HEADER.join(","))?;
    let f = fmt_g9(m.frequency().ghz());
    for s in m.samples() {
        writeln!(
            out,
            "{f},{},{}",
            fmt_g9(s.distance_m),
            fmt_g9(s.path_loss_db)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(text: &str) -> CliResult<RawCampaign> {
        read_campaign(text.as_bytes())
    }

    fn err_text(r: CliResult<impl std::fmt::Debug>) -> String {
        r.unwrap_err().to_string()
    }

    #[test]
    fn reads_path_loss_rows() {
        let raw =
            read("frequency_ghz,distance_m,path_loss_db\n140,0.2,76\n140,0.1,70\n140,0.3,80\n")
                .unwrap();
        assert_eq!(raw.convention, Convention::PathLoss);
        let m = to_measurements(&raw, 0.1, &LinkBudget::default()).unwrap();
        assert_eq!(m.distances().collect::<Vec<_>>(), [0.1, 0.2, 0.3]);
        assert_eq!(m.frequency().ghz(), 140.0);
    }

    #[test]
    fn malformed_row_reports_its_line() {
        let e = err_text(read(
            "frequency_ghz,distance_m,path_loss_db\n140,0.2,76\n140,abc,70\n",
        ));
        assert!(e.starts_with("line 3:"), "{e}");
        assert!(e.contains("distance_m"), "{e}");
        let e = err_text(read("frequency_ghz,distance_m,path_loss_db\n140,0.2\n"));
        assert!(e.starts_with("line 2:"), "{e}");
    }

    #[test]
    fn unknown_header_is_a_data_error() {
        let e = read("freq,dist,pl\n1,2,3\n").unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn two_rows_are_insufficient() {
        let raw = read("frequency_ghz,distance_m,path_loss_db\n140,0.2,76\n140,0.3,80\n").unwrap();
        let e = err_text(to_measurements(&raw, 0.1, &LinkBudget::default()));
        assert!(e.contains("insufficient samples"), "{e}");
    }

    #[test]
    fn mixed_frequencies_are_listed() {
        let raw =
            read("frequency_ghz,distance_m,path_loss_db\n140,0.2,76\n155,0.3,80\n140,0.4,82\n")
                .unwrap();
        let e = err_text(to_measurements(&raw, 0.1, &LinkBudget::default()));
        assert!(e.contains("140, 155 GHz"), "{e}");
    }

    #[test]
    fn received_power_converts_with_gains() {
        let raw = read(
            "frequency_ghz,distance_m,received_power_dbm\n140,0.1,-28\n140,0.2,-34\n140,0.4,-40\n",
        )
        .unwrap();
        let budget = LinkBudget {
            tx_power_dbm: Some(0.0),
            tx: AntennaSpec::preset("WR-6.5"),
            rx: AntennaSpec::preset("WR-6.5"),
        };
        let m = to_measurements(&raw, 0.1, &budget).unwrap();
        assert_eq!(m.path_losses().collect::<Vec<_>>(), [70.0, 76.0, 82.0]);

        let e = to_measurements(&raw, 0.1, &LinkBudget::default()).unwrap_err();
        assert_eq!(e.exit_code(), 1);

        let wrong_band = LinkBudget {
            tx_power_dbm: Some(0.0),
            tx: AntennaSpec::preset("WR-2.2"),
            rx: None,
        };
        let e = err_text(to_measurements(&raw, 0.1, &wrong_band));
        assert!(e.contains("WR-2.2"), "{e}");
    }

    #[test]
    fn sweep_rows_are_band_averaged() {
        let raw = read(
            "sweep_frequency_ghz,distance_m,s21_db\n\
             139.9,0.2,-75\n140.0,0.2,-76\n140.1,0.2,-77\n\
             139.9,0.1,-69\n140.0,0.1,-70\n140.1,0.1,-71\n\
             139.9,0.3,-80\n140.0,0.3,-80\n140.1,0.3,-80\n",
        )
        .unwrap();
        let m = to_measurements(&raw, 0.1, &LinkBudget::default()).unwrap();
        assert_eq!(m.path_losses().collect::<Vec<_>>(), [70.0, 76.0, 80.0]);
        assert!((m.frequency().ghz() - 140.0).abs() < 1e-12);
    }

    #[test]
    fn duplicate_distances_are_rejected() {
        let raw =
            read("frequency_ghz,distance_m,path_loss_db\n140,0.2,76\n140,0.2,77\n140,0.3,80\n")
                .unwrap();
        let e = err_text(to_measurements(&raw, 0.1, &LinkBudget::default()));
        assert!(e.contains("duplicate distance 0.2"), "{e}");
    }

    #[test]
    fn written_sets_read_back() {
        let raw = read("frequency_ghz,distance_m,path_loss_db\n140,0.1016,70.25\n140,0.1524,73.5\n140,0.2032,76.125\n")
            .unwrap();
        let m = to_measurements(&raw, 0.1, &LinkBudget::default()).unwrap();
        let mut buf = Vec::new();
        write_measurements(&mut buf, &m).unwrap();
        let again = to_measurements(
            &read_campaign(buf.as_slice()).unwrap(),
            0.1,
            &LinkBudget::default(),
        )
        .unwrap();
        assert_eq!(again, m);
    }
}
