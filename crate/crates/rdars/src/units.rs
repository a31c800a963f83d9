//! dB/linear conversions. All internal computations run in linear scale;
//! decibels appear only at configuration and reporting boundaries.

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// dBm to milliwatts. The crate uses milliwatts as its linear power unit.
pub fn dbm_to_mw(dbm: f64) -> f64 {
    db_to_linear(dbm)
}

#[cfg(test)]
mod test {
    use super::*;

    #[test]
    fn round_trip() {
        for &db in &[-90.0, -30.0, 0.0, 10.0, 27.5] {
            let lin = db_to_linear(db);
            assert!((linear_to_db(lin) - db).abs() < 1e-12);
        }
        assert_eq!(dbm_to_mw(0.0), 1.0);
        assert!((dbm_to_mw(-90.0) - 1e-9).abs() < 1e-24);
    }
}
