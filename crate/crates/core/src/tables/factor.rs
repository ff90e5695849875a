//! Signed integers written as prime factorizations, `-2^4*3^3*5`.

/// Parses `[-]p^e*q*...`; a bare `1` or `-1` is allowed.
pub fn parse_factored(s: &str) -> Option<i128> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.replace(['·', '⋅'], "*").replace('−', "-");
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1, rest.to_string()),
        None => (1, t),
    };
    let mut v: i128 = 1;
    for part in body.split('*') {
        let (base, exp) = match part.split_once('^') {
            Some((b, e)) => (b.parse::<i128>().ok()?, e.parse::<u32>().ok()?),
            None => (part.parse::<i128>().ok()?, 1),
        };
        v = v.checked_mul(base.checked_pow(exp)?)?;
    }
    Some(sign * v)
}

/// Inverse of [`parse_factored`], primes ascending.
pub fn format_factored(n: i128) -> String {
    if n == 0 {
        return "0".into();
    }
    let mut m = n.unsigned_abs();
    let mut parts = Vec::new();
    let mut p = 2u128;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        match e {
            0 => {}
            1 => parts.push(p.to_string()),
            _ => parts.push(format!("{p}^{e}")),
        }
        p += 1;
    }
    if m > 1 {
        parts.push(m.to_string());
    }
    if parts.is_empty() {
        parts.push("1".into());
    }
    let sign = if n < 0 { "-" } else { "" };
    format!("{sign}{}", parts.join("*"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        assert_eq!(parse_factored("-2^4*3^3*5"), Some(-2160));
        assert_eq!(format_factored(-2160), "-2^4*3^3*5");
        assert_eq!(format_factored(-7), "-7");
        assert_eq!(format_factored(1), "1");
        assert_eq!(parse_factored("2·3·5"), Some(30));
        assert_eq!(parse_factored("x"), None);
        for n in [-512i128, 81, 2, -1, 1_234_567] {
            assert_eq!(parse_factored(&format_factored(n)), Some(n));
        }
    }
}
