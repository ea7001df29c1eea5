//! Number formatting for human-readable reports.

/// Significant digits in report output.
pub const REPORT_DIGITS: usize = 11;

/// Formats `x` with `digits` significant digits: fixed notation for moderate
/// magnitudes, scientific otherwise.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    // round first so that 9.99999 -> 10.0000 picks the right exponent
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// [`sig`] at report precision.
pub fn num(x: f64) -> String {
    sig(x, REPORT_DIGITS)
}

/// Short scientific form for residuals and error magnitudes.
pub fn small(x: f64) -> String {
    format!("{x:.2e}")
}

/// Left-aligned plain-text table with two-space column gaps.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(&mut header.iter().copied());
    out.push('\n');
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(num(2075.856543013658), "2075.8565430");
        assert_eq!(num(0.0352540231809955), "0.035254023181");
        assert_eq!(num(1020.873739303046), "1020.8737393");
        assert_eq!(num(2000.0), "2000.0000000");
        assert_eq!(sig(9.99999, 3), "10.0");
        assert_eq!(sig(1.5e-7, 3), "1.50e-7");
        assert_eq!(sig(-0.25, 2), "-0.25");
        assert_eq!(sig(0.0, 5), "0");
    }

    #[test]
    fn table_alignment() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }
}
