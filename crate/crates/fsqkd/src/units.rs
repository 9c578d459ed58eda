//! Physical constants and unit helpers.
//!
//! Every model routine works in SI base units (metres, seconds, hertz).
//! Millimetres, kilometres and nanometres only appear at the CLI/config
//! boundary; convert them here and nowhere else.

/// Planck constant times speed of light, J·m.
pub const HC: f64 = 1.98645e-25;

/// Speed of light in vacuum, m/s.
pub const C_LIGHT: f64 = 2.99792458e8;

/// Linear transmittance to decibels (negative for loss).
pub fn db_from_linear(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Decibels to linear transmittance.
pub fn linear_from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn m_from_mm(mm: f64) -> f64 {
    mm * 1e-3
}

pub fn m_from_km(km: f64) -> f64 {
    km * 1e3
}

pub fn m_from_nm(nm: f64) -> f64 {
    nm * 1e-9
}

pub fn nm_from_m(m: f64) -> f64 {
    m * 1e9
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_round_trip() {
        let x = 0.0316227766;
        assert!((linear_from_db(db_from_linear(x)) - x).abs() < 1e-15);
        assert!((db_from_linear(0.1) + 10.0).abs() < 1e-12);
    }
}
