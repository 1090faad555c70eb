use potbip::oracle::TableRow;

pub const HEADER: &str = "n\tD\tr\tr/D\tB\tB_w\tB_w/B";

/// Six significant digits with trailing zeros removed, like C's `%g`.
pub fn format_ratio(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&exp) {
        let s = format!("{x:.5e}");
        let (mantissa, e) = s.split_once('e').expect("exponent");
        let mantissa = trim_zeros(mantissa);
        let e: i32 = e.parse().expect("exponent");
        return format!("{mantissa}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs());
    }
    let decimals = (5 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn format_row(row: &TableRow) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        row.n,
        row.d,
        row.r,
        format_ratio(row.r_ratio()),
        row.b,
        row.b_w,
        format_ratio(row.b_w_ratio())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_formatting() {
        assert_eq!(format_ratio(53.0 / 71.0), "0.746479");
        assert_eq!(format_ratio(158074.0 / 162769.0), "0.971155");
        assert_eq!(format_ratio(0.0), "0");
        assert_eq!(format_ratio(1.0), "1");
        assert_eq!(format_ratio(0.5), "0.5");
        assert_eq!(format_ratio(2.0 / 11601.0), "0.000172399");
        assert_eq!(format_ratio(1.5e-7), "1.5e-07");
    }

    #[test]
    fn row_layout() {
        let row = TableRow {
            n: 6,
            d: 71,
            r: 53,
            b: 18,
            b_w: 0,
        };
        assert_eq!(format_row(&row), "6\t71\t53\t0.746479\t18\t0\t0");
        assert_eq!(
            HEADER.split('\t').count(),
            format_row(&row).split('\t').count()
        );
    }
}
