use swchan_core::{path_loss_sffl, MeasurementSet, SfflParams};

use crate::error::{Error, Result};

/// `fit(d) - measured(d)` on the measurement grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSeries {
    pub points: Vec<(f64, f64)>,
    pub d0_m: f64,
}

impl ResidualSeries {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.1)
    }
}

pub fn residuals(m: &MeasurementSet, p: &SfflParams) -> Result<ResidualSeries> {
    let points = m
        .samples()
        .iter()
        .map(|s| {
            Ok((
                s.distance_m,
                path_loss_sffl(p, s.distance_m)? - s.path_loss_db,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResidualSeries {
        points,
        d0_m: p.d0_m(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub distance_m: f64,
    pub value_db: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Extrema {
    pub maxima: Vec<Extremum>,
    pub minima: Vec<Extremum>,
}

impl Extrema {
    pub fn count(&self) -> usize {
        self.maxima.len() + self.minima.len()
    }
}

/// Interior local extrema by neighbour comparison.
///
/// A run of equal values counts as one extremum, reported at its leftmost
/// index, when both values flanking the run are strictly lower (maximum) or
/// strictly higher (minimum). Runs touching either end of the series are
/// never reported.
pub fn detect_extrema(r: &ResidualSeries) -> Result<Extrema> {
    let pts = &r.points;
    if pts.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            found: pts.len(),
        });
    }
    let mut out = Extrema::default();
    let mut start = 1;
    while start < pts.len() - 1 {
        let v = pts[start].1;
        let mut end = start;
        while end + 1 < pts.len() && pts[end + 1].1 == v {
            end += 1;
        }
        if end + 1 < pts.len() {
            let (left, right) = (pts[start - 1].1, pts[end + 1].1);
            let e = Extremum {
                distance_m: pts[start].0,
                value_db: v,
            };
            if v > left && v > right {
                out.maxima.push(e);
            } else if v < left && v < right {
                out.minima.push(e);
            }
        }
        start = end + 1;
    }
    Ok(out)
}
