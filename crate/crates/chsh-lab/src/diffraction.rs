//! Double-slit / grating geometry: maximum angles theta = asin(J*lambda/d)
//! and screen positions y = x*tan(theta).
//!
//! Everything is stored in SI units (meters, with radians inside the trig);
//! degrees, nanometers, and centimeters appear only at the presentation edge
//! because that is how the published table prints them.

use crate::error::{Error, Result};
use crate::report::{ReportRow, ReportTable};

/// Slit spacing, screen distance, labeled wavelengths, and the maximum
/// diffraction order to tabulate.
#[derive(Debug, Clone)]
pub struct DiffractionSetup {
    pub slit_spacing_m: f64,
    pub screen_distance_m: f64,
    /// (label, wavelength in meters)
    pub wavelengths: Vec<(String, f64)>,
    pub max_order: u32,
}

impl DiffractionSetup {
    pub fn new(
        slit_spacing_m: f64,
        screen_distance_m: f64,
        wavelengths: Vec<(String, f64)>,
        max_order: u32,
    ) -> Result<Self> {
        if !(slit_spacing_m.is_finite() && slit_spacing_m > 0.0) {
            return Err(Error::Domain(format!(
                "slit spacing must be positive, got {slit_spacing_m} m"
            )));
        }
        if !(screen_distance_m.is_finite() && screen_distance_m > 0.0) {
            return Err(Error::Domain(format!(
                "screen distance must be positive, got {screen_distance_m} m"
            )));
        }
        for (label, w) in &wavelengths {
            if !(w.is_finite() && *w > 0.0) {
                return Err(Error::Domain(format!(
                    "wavelength '{label}' must be positive, got {w} m"
                )));
            }
        }
        Ok(Self {
            slit_spacing_m,
            screen_distance_m,
            wavelengths,
            max_order,
        })
    }

    /// Converts "1000 lines per centimeter" style grating specs to a spacing.
    pub fn spacing_from_lines_per_cm(lines_per_cm: f64) -> Result<f64> {
        if !(lines_per_cm.is_finite() && lines_per_cm > 0.0) {
            return Err(Error::Domain(format!(
                "lines per cm must be positive, got {lines_per_cm}"
            )));
        }
        Ok(0.01 / lines_per_cm)
    }
}

/// Angle of the J-th maximum in degrees. Fails with an evanescent-order
/// error when J*lambda/d exceeds 1 (no propagating maximum exists).
pub fn diffraction_angle(order: u32, wavelength_m: f64, slit_spacing_m: f64) -> Result<f64> {
    let ratio = order as f64 * wavelength_m / slit_spacing_m;
    if ratio > 1.0 {
        return Err(Error::EvanescentOrder(ratio));
    }
    Ok(ratio.asin().to_degrees())
}

/// Screen position x*tan(theta), reported in centimeters.
pub fn screen_position(theta_deg: f64, screen_distance_m: f64) -> Result<f64> {
    if theta_deg.abs() >= 90.0 {
        return Err(Error::Domain(format!(
            "screen position undefined at |theta| >= 90 deg, got {theta_deg}"
        )));
    }
    Ok(screen_distance_m * theta_deg.to_radians().tan() * 100.0)
}

/// One propagating maximum of a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub label: String,
    pub order: u32,
    pub wavelength_m: f64,
    pub theta_deg: f64,
    pub y_cm: f64,
}

/// All propagating maxima for orders 1..=max_order, sorted by (J, lambda).
/// Evanescent orders are omitted, not fatal.
pub fn spectrum(setup: &DiffractionSetup) -> Result<Vec<SpectrumRow>> {
    let mut wavelengths = setup.wavelengths.clone();
    wavelengths.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite wavelengths"));

    let mut rows = Vec::new();
    for order in 1..=setup.max_order {
        for (label, w) in &wavelengths {
            match diffraction_angle(order, *w, setup.slit_spacing_m) {
                Ok(theta_deg) => rows.push(SpectrumRow {
                    label: label.clone(),
                    order,
                    wavelength_m: *w,
                    theta_deg,
                    y_cm: screen_position(theta_deg, setup.screen_distance_m)?,
                }),
                Err(Error::EvanescentOrder(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(rows)
}

/// Report table with two rows (theta, y) per maximum. Published values
/// attach when the setup matches the tabulated one (d = 0.01 mm, x = 2 m).
pub fn spectrum_table(setup: &DiffractionSetup, rows: &[SpectrumRow]) -> ReportTable {
    let published_setup = (setup.slit_spacing_m - crate::reference::DIFFRACTION_SLIT_SPACING_M)
        .abs()
        < 1e-12
        && (setup.screen_distance_m - crate::reference::DIFFRACTION_SCREEN_DISTANCE_M).abs()
            < 1e-12;

    let mut table = ReportTable::new(
        "diffraction_spectrum",
        format!(
            "Diffraction maxima for d = {} m, x = {} m",
            setup.slit_spacing_m, setup.screen_distance_m
        ),
    );
    for row in rows {
        let nm = row.wavelength_m * 1e9;
        let published = if published_setup {
            crate::reference::DIFFRACTION_ROWS
                .iter()
                .find(|&&(j, w_nm, _, _)| j == row.order && (w_nm - nm).abs() < 1e-6)
        } else {
            None
        };
        let id = format!("J{}/{}nm", row.order, nm);
        let mut theta_row = ReportRow::computed(format!("{id}/theta_deg"), row.theta_deg);
        let mut y_row = ReportRow::computed(format!("{id}/y_cm"), row.y_cm);
        if let Some(&(_, _, theta_pub, y_pub)) = published {
            theta_row = theta_row.with_paper(theta_pub);
            y_row = y_row.with_paper(y_pub);
        }
        table.rows.push(theta_row);
        table.rows.push(y_row);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn published_setup() -> DiffractionSetup {
        DiffractionSetup::new(
            1.0e-5,
            2.0,
            vec![
                ("blue".into(), 485.0e-9),
                ("green".into(), 565.0e-9),
                ("red".into(), 750.0e-9),
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn angle_examples() {
        let theta = diffraction_angle(1, 485.0e-9, 1.0e-5).unwrap();
        assert!((theta - 2.78).abs() < 0.01);
        let theta = diffraction_angle(2, 750.0e-9, 1.0e-5).unwrap();
        assert!((theta - 8.63).abs() < 0.01);
        assert_eq!(diffraction_angle(0, 500.0e-9, 1.0e-5).unwrap(), 0.0);
    }

    #[test]
    fn angle_round_trip() {
        for (order, w) in [(1u32, 485.0e-9), (2, 565.0e-9), (2, 750.0e-9)] {
            let theta = diffraction_angle(order, w, 1.0e-5).unwrap();
            let recovered = theta.to_radians().sin();
            assert!((recovered - order as f64 * w / 1.0e-5).abs() < 1e-12);
        }
    }

    #[test]
    fn evanescent_order_error() {
        match diffraction_angle(2, 750.0e-9, 1.0e-6) {
            Err(Error::EvanescentOrder(r)) => assert!((r - 1.5).abs() < 1e-12),
            other => panic!("expected evanescent error, got {other:?}"),
        }
    }

    #[test]
    fn position_examples() {
        assert!((screen_position(2.78, 2.0).unwrap() - 9.71).abs() < 0.02);
        assert!((screen_position(8.63, 2.0).unwrap() - 30.34).abs() < 0.02);
        assert_eq!(screen_position(0.0, 2.0).unwrap(), 0.0);
        assert!(screen_position(90.0, 2.0).is_err());
    }

    #[test]
    fn spectrum_reproduces_published_rows() {
        let rows = spectrum(&published_setup()).unwrap();
        assert_eq!(rows.len(), 6);
        for (row, &(j, w_nm, theta_pub, y_pub)) in
            rows.iter().zip(crate::reference::DIFFRACTION_ROWS.iter())
        {
            assert_eq!(row.order, j);
            assert!((row.wavelength_m * 1e9 - w_nm).abs() < 1e-9);
            assert!((row.theta_deg - theta_pub).abs() < 0.01, "{row:?}");
            assert!((row.y_cm - y_pub).abs() < 0.02, "{row:?}");
        }
    }

    #[test]
    fn spectrum_edges() {
        let mut setup = published_setup();
        setup.max_order = 0;
        assert!(spectrum(&setup).unwrap().is_empty());

        // 1-micron spacing: second order of 750 nm does not propagate
        let tight = DiffractionSetup::new(1.0e-6, 2.0, vec![("red".into(), 750.0e-9)], 2).unwrap();
        let rows = spectrum(&tight).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].order, 1);
    }

    #[test]
    fn positions_increase_in_order_and_wavelength() {
        let rows = spectrum(&published_setup()).unwrap();
        for pair in rows.windows(2) {
            if pair[0].order == pair[1].order {
                assert!(pair[0].wavelength_m < pair[1].wavelength_m);
                assert!(pair[0].y_cm < pair[1].y_cm);
            }
        }
        // same wavelength, increasing order
        let first_red = rows.iter().find(|r| r.label == "red" && r.order == 1).unwrap();
        let second_red = rows.iter().find(|r| r.label == "red" && r.order == 2).unwrap();
        assert!(first_red.y_cm < second_red.y_cm);
    }

    #[test]
    fn lines_per_cm_matches_spacing() {
        let d = DiffractionSetup::spacing_from_lines_per_cm(1000.0).unwrap();
        assert!((d - 1.0e-5).abs() < 1e-20);
    }

    #[test]
    fn invalid_setup_rejected() {
        assert!(DiffractionSetup::new(0.0, 2.0, vec![], 1).is_err());
        assert!(DiffractionSetup::new(1e-5, -1.0, vec![], 1).is_err());
        assert!(DiffractionSetup::new(1e-5, 2.0, vec![("x".into(), 0.0)], 1).is_err());
    }

    #[test]
    fn published_overlay_attaches() {
        let setup = published_setup();
        let rows = spectrum(&setup).unwrap();
        let table = spectrum_table(&setup, &rows);
        assert_eq!(table.rows.len(), 12);
        assert!(table.rows.iter().all(|r| r.paper_value.is_some()));

        let other = DiffractionSetup::new(2.0e-5, 2.0, vec![("x".into(), 485e-9)], 1).unwrap();
        let rows = spectrum(&other).unwrap();
        let table = spectrum_table(&other, &rows);
        assert!(table.rows.iter().all(|r| r.paper_value.is_none()));
    }
}
