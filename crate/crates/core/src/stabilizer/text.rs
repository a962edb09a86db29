//! Check-matrix text format.
//!
//! ```text
//! 3 2
//! +100|001
//! +001|010
//! ```
//!
//! Line one holds `n m`; each of the following `m` lines holds a sign
//! (`+`, `-` or U+2212), `n` X bits, `|`, and `n` Z bits. Blank lines and
//! lines starting with `#` are ignored. Writing always uses ASCII signs.

use crate::error::{Error, Result};
use crate::f2::BitVector;
use crate::pauli::{PauliOperator, Sign};

/// A parsed check-matrix file: generator list as written, not validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckMatrixFile {
    pub n: usize,
    pub generators: Vec<PauliOperator>,
}

impl CheckMatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        let (n, generators) = parse_check_matrix(text)?;
        Ok(Self { n, generators })
    }

    #[must_use]
    pub fn to_text(&self) -> String {
        write_check_matrix(self.n, &self.generators)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_bits(s: &str, n: usize, line: usize, half: &str) -> Result<BitVector> {
    if s.chars().count() != n {
        return Err(parse_err(
            line,
            format!("{half} part has {} bits, expected {n}", s.chars().count()),
        ));
    }
    BitVector::parse(s).map_err(|_| parse_err(line, format!("{half} part {s:?} contains a non-bit character")))
}

/// Parses the text format into `(n, generators)`.
pub fn parse_check_matrix(text: &str) -> Result<(usize, Vec<PauliOperator>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(hline, "header must be \"n m\""));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| parse_err(hline, format!("invalid qubit count {:?}", fields[0])))?;
    let m: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(hline, format!("invalid generator count {:?}", fields[1])))?;

    let mut generators = Vec::with_capacity(m);
    for (line, body) in lines.by_ref().take(m) {
        let mut chars = body.chars();
        let sign = match chars.next() {
            Some('+') => Sign::Plus,
            Some('-' | '\u{2212}') => Sign::Minus,
            other => {
                return Err(parse_err(
                    line,
                    format!("expected sign '+' or '-', found {:?}", other.unwrap_or(' ')),
                ))
            }
        };
        let rest = chars.as_str();
        let (xs, zs) = rest
            .split_once('|')
            .ok_or_else(|| parse_err(line, "missing '|' between X and Z bits"))?;
        let x = parse_bits(xs, n, line, "X")?;
        let z = parse_bits(zs, n, line, "Z")?;
        generators.push(PauliOperator::hermitian(x, z, sign));
    }
    if generators.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {m} generator lines, found {}", generators.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, format!("unexpected content after {m} generator lines")));
    }
    Ok((n, generators))
}

/// Writes generators in the text format. Generators must be Hermitian.
///
/// # Panics
/// Panics on a non-Hermitian generator, which the format cannot express.
#[must_use]
pub fn write_check_matrix(n: usize, generators: &[PauliOperator]) -> String {
    let mut out = format!("{n} {}\n", generators.len());
    for g in generators {
        let sign = g.sign().expect("check-matrix rows must be Hermitian");
        out.push(if sign == Sign::Plus { '+' } else { '-' });
        out.push_str(&g.x().to_string());
        out.push('|');
        out.push_str(&g.z().to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::random_stabilizer_group;
    use proptest::prelude::*;

    #[test]
    fn parses_worked_example() {
        let (n, gens) = parse_check_matrix("3 2\n+100|001\n+001|010\n").unwrap();
        assert_eq!(n, 3);
        assert_eq!(gens[0].to_string(), "+XIZ");
        assert_eq!(gens[1].to_string(), "+IZX");
    }

    #[test]
    fn accepts_comments_and_unicode_minus() {
        let (_, gens) = parse_check_matrix("# bell\n2 2\n\n+00|11\n\u{2212}11|00\n").unwrap();
        assert_eq!(gens[1].to_string(), "-XX");
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_check_matrix("3 2\n+100|001\n*001|010\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_check_matrix("3 1\n+10|001\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_check_matrix("3 1\n+100001\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_check_matrix("3 1\n+102|001\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_check_matrix("3 2\n+100|001\n").is_err());
        assert!(parse_check_matrix("3 1\n+100|001\n+100|001\n").is_err());
        assert!(parse_check_matrix("").is_err());
        assert!(parse_check_matrix("three 1\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(seed in any::<u64>(), n in 1usize..9, m in 0usize..9) {
            let g = random_stabilizer_group(n, m.min(n), seed);
            let text = g.to_text();
            let parsed = CheckMatrixFile::parse(&text).unwrap();
            prop_assert_eq!(&parsed.generators, &g.generators().to_vec());
            prop_assert_eq!(parsed.to_text(), text);
        }
    }
}
