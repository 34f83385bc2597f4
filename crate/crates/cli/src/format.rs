//! Number and list handling shared by the subcommands.

/// `%.12g`: 12 significant digits, trailing zeros dropped, exponent form
/// outside 1e-5 ≤ |x| < 1e12.
pub fn g12(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if !(-5..DIGITS).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn parse_one<T: std::str::FromStr>(item: &str, what: &str) -> Result<T, String> {
    item.trim().parse().map_err(|_| format!("invalid {what} '{item}'"))
}

/// Comma list of unsigned integers, each item either `v` or an inclusive range `lo-hi`.
pub fn uint_list(s: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        match item.split_once('-') {
            Some((lo, hi)) => {
                let lo: u64 = parse_one(lo, "range start")?;
                let hi: u64 = parse_one(hi, "range end")?;
                if lo > hi {
                    return Err(format!("empty range '{item}'"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse_one(item, "integer")?),
        }
    }
    Ok(out)
}

/// Comma list of signed integers.
pub fn int_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',').map(|item| parse_one(item, "integer")).collect()
}

/// Comma list of reals; each item is converted from its decimal string once.
pub fn real_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(real).collect()
}

pub fn real(s: &str) -> Result<f64, String> {
    let x: f64 = parse_one(s, "number")?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("'{s}' is not a finite number"))
    }
}
