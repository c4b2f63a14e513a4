//! Decibel conversions.
//!
//! Amplitude-like quantities (voltages) use a factor of 20, power-like
//! quantities a factor of 10.

pub fn amplitude_from_db(db: f64) -> f64 {
    10f64.powf(db / 20.0)
}

pub fn amplitude_to_db(amplitude: f64) -> f64 {
    20.0 * amplitude.log10()
}

pub fn power_from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn power_to_db(ratio: f64) -> f64 {
    10.0 * ratio.log10()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_invert() {
        for db in [-40.0, -3.0, 0.0, 0.28, 12.5] {
            assert!((amplitude_to_db(amplitude_from_db(db)) - db).abs() < 1e-12);
            assert!((power_to_db(power_from_db(db)) - db).abs() < 1e-12);
        }
        assert_eq!(amplitude_from_db(20.0), 10.0);
        assert_eq!(power_from_db(20.0), 100.0);
    }
}
