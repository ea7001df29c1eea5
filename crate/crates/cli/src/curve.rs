//! `P_ue` curves sampled over the channel's error-probability range, and
//! their CSV form.

use std::io;

use uedetect_core::ue_probability::{bad_bound, good_bound, p_max, pue, pue_perp};
use uedetect_core::{CodeSize, DistributionA, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub p: f64,
    pub pue: f64,
    pub pue_perp: f64,
    pub good_bound: f64,
    pub bad_bound: f64,
}

pub const CSV_HEADER: [&str; 5] = ["p", "pue", "pue_perp", "good_bound", "bad_bound"];

/// Samples `p_j = j·(q-1)/(q·grid)` for `j = 1..=grid`.
pub fn sample(a: &DistributionA, q: u32, size: CodeSize, grid: usize) -> Result<Vec<CurveRow>> {
    let n = a.n();
    let (good, bad) = (good_bound(q, size, n), bad_bound(q, size, n));
    let pmax = p_max(q);
    (1..=grid)
        .map(|j| {
            let p = if j == grid {
                pmax
            } else {
                pmax * j as f64 / grid as f64
            };
            Ok(CurveRow {
                p,
                pue: pue(a, q, p)?,
                pue_perp: pue_perp(a, q, size, p)?,
                good_bound: good,
                bad_bound: bad,
            })
        })
        .collect()
}

/// 17 significant digits, enough to round-trip any `f64`.
fn full_precision(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: io::Write>(rows: &[CurveRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([r.p, r.pue, r.pue_perp, r.good_bound, r.bad_bound].map(full_precision))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let a = DistributionA::from_counts(vec![1, 0, 0, 1]).unwrap();
        let rows = sample(&a, 2, CodeSize::Dimension(1), 4).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.split('\n').collect();
        assert_eq!(lines[0], "p,pue,pue_perp,good_bound,bad_bound");
        assert_eq!(lines.len(), 6, "{text:?}");
        assert_eq!(lines[5], "");
        assert!(!text.contains('\r'));
        // p = 1/2: A_3 (1/2)^3 = 1/8; the dual is the even-weight [3,2] code
        let row: Vec<f64> = lines[4].split(',').map(|c| c.parse().unwrap()).collect();
        let want = [0.5, 0.125, 0.375, 0.125, 0.25];
        for (got, want) in row.iter().zip(want) {
            assert!((got - want).abs() <= 1e-15, "{row:?}");
        }
        assert_eq!(lines[4].split(',').next(), Some("5.0000000000000000e-1"));
    }
}
