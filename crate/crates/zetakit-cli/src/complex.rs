//! Complex literal parsing: `a`, `ai`, `a+bi`, `a-bi` with decimal reals
//! (scientific notation allowed, e.g. `1e-3+2.5i`).

use num::complex::Complex64;

fn parse_real(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("invalid real literal `{s}`"))
}

/// Coefficient of an imaginary part: empty / `+` / `-` mean 1 / 1 / -1.
fn parse_imag_coeff(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        other => parse_real(other),
    }
}

/// Index of the sign splitting `a+bi` / `a-bi` into parts, ignoring a
/// leading sign and exponent signs (`1e-3`).
fn split_sign(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    for i in (1..bytes.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-')
            && !matches!(bytes[i - 1], b'e' | b'E')
        {
            return Some(i);
        }
    }
    None
}

pub fn parse_complex(input: &str) -> Result<Complex64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(rest) = s.strip_suffix(['i', 'I']) {
        match split_sign(rest) {
            Some(idx) => {
                let re = parse_real(&rest[..idx])?;
                let im = parse_imag_coeff(&rest[idx..])?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, parse_imag_coeff(rest)?)),
        }
    } else {
        if split_sign(&s).is_some() {
            return Err(format!(
                "invalid complex literal `{input}` (missing trailing i?)"
            ));
        }
        Ok(Complex64::new(parse_real(&s)?, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_forms() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("-1.5").unwrap(), Complex64::new(-1.5, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(
            parse_complex("0.5+14.134725i").unwrap(),
            Complex64::new(0.5, 14.134725)
        );
        assert_eq!(parse_complex("3-2i").unwrap(), Complex64::new(3.0, -2.0));
        assert_eq!(
            parse_complex("1e-3+2.5i").unwrap(),
            Complex64::new(1e-3, 2.5)
        );
        assert_eq!(parse_complex(" 1 + 2 i ").unwrap(), Complex64::new(1.0, 2.0));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_complex("").is_err());
        assert!(parse_complex("1+2").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+bi").is_err());
    }
}
