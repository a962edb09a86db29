//! Cellulation text format.
//!
//! ```text
//! VERTICES 2
//! EDGES 3
//! 1 1 2
//! 2 1 2
//! 3 1 2
//! FACES 3
//! 1 1 2
//! 2 2 3
//! 3 3 1
//! ```
//!
//! All ids are 1-based and must appear in order. Edge lines are
//! `id u v`; face lines are `id e1 e2 … ek` listing a closed edge walk.
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};

use super::Cellulation;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {token:?}")))
}

fn one_based(token: &str, line: usize, what: &str) -> Result<usize> {
    match number(token, line, what)? {
        0 => Err(parse_err(line, format!("{what} ids start at 1"))),
        k => Ok(k - 1),
    }
}

struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        Self {
            inner: Box::new(inner),
            last: 0,
        }
    }

    fn next_line(&mut self, expecting: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l.split_whitespace().collect()))
            }
            None => Err(parse_err(self.last + 1, format!("unexpected end of input, expected {expecting}"))),
        }
    }

    fn header(&mut self, keyword: &str) -> Result<usize> {
        let (line, fields) = self.next_line(keyword)?;
        if fields.len() != 2 || fields[0] != keyword {
            return Err(parse_err(line, format!("expected \"{keyword} <count>\"")));
        }
        number(fields[1], line, "count")
    }

    /// An `id rest…` line whose id must equal `expected` (0-based).
    fn item(&mut self, what: &str, expected: usize) -> Result<(usize, Vec<&'a str>)> {
        let (line, fields) = self.next_line(what)?;
        let id = one_based(fields[0], line, what)?;
        if id != expected {
            return Err(parse_err(line, format!("expected {what} id {}, found {}", expected + 1, id + 1)));
        }
        Ok((line, fields[1..].to_vec()))
    }
}

/// Parses and validates a cellulation.
pub fn parse_cellulation(text: &str) -> Result<Cellulation> {
    let mut lines = Lines::new(text);
    let num_vertices = lines.header("VERTICES")?;
    let num_edges = lines.header("EDGES")?;
    let mut edges = Vec::with_capacity(num_edges);
    for i in 0..num_edges {
        let (line, rest) = lines.item("edge", i)?;
        if rest.len() != 2 {
            return Err(parse_err(line, "edge lines are \"id u v\""));
        }
        edges.push((one_based(rest[0], line, "vertex")?, one_based(rest[1], line, "vertex")?));
    }
    let num_faces = lines.header("FACES")?;
    let mut faces = Vec::with_capacity(num_faces);
    for i in 0..num_faces {
        let (line, rest) = lines.item("face", i)?;
        if rest.is_empty() {
            return Err(parse_err(line, "face lines are \"id e1 e2 ... ek\""));
        }
        faces.push(
            rest.iter()
                .map(|t| one_based(t, line, "edge"))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if let Ok((line, _)) = lines.next_line("end of input") {
        return Err(parse_err(line, "unexpected content after the last face"));
    }
    Cellulation::new(num_vertices, edges, faces)
}

/// Writes a cellulation in canonical form.
#[must_use]
pub fn write_cellulation(c: &Cellulation) -> String {
    let mut out = format!("VERTICES {}\nEDGES {}\n", c.num_vertices(), c.num_edges());
    for (i, (u, v)) in c.edges().iter().enumerate() {
        out.push_str(&format!("{} {} {}\n", i + 1, u + 1, v + 1));
    }
    out.push_str(&format!("FACES {}\n", c.num_faces()));
    for (i, face) in c.faces().iter().enumerate() {
        out.push_str(&(i + 1).to_string());
        for e in face {
            out.push_str(&format!(" {}", e + 1));
        }
        out.push('\n');
    }
    out
}

impl Cellulation {
    pub fn parse(text: &str) -> Result<Self> {
        parse_cellulation(text)
    }

    #[must_use]
    pub fn to_text(&self) -> String {
        write_cellulation(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{cube, theta, toric, valence_counterexample};

    #[test]
    fn round_trips() {
        for c in [theta(), cube(), toric(2).unwrap(), toric(3).unwrap(), valence_counterexample()] {
            let text = c.to_text();
            let back = Cellulation::parse(&text).unwrap();
            assert_eq!(back, c);
            assert_eq!(back.to_text(), text);
            assert_eq!(Cellulation::parse(&c.dual().to_text()).unwrap(), c.dual());
        }
    }

    #[test]
    fn reads_comments() {
        let text = "# theta graph\nVERTICES 2\n\nEDGES 3\n1 1 2\n2 1 2\n3 1 2\nFACES 3\n1 1 2\n2 2 3\n3 3 1\n";
        assert_eq!(Cellulation::parse(text).unwrap(), theta());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let line_of = |text: &str| match Cellulation::parse(text).unwrap_err() {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other}"),
        };
        assert_eq!(line_of("VERTEX 2\n"), 1);
        assert_eq!(line_of("VERTICES 2\nEDGES 1\n2 1 2\n"), 3);
        assert_eq!(line_of("VERTICES 2\nEDGES 1\n1 1 x\n"), 3);
        assert_eq!(line_of("VERTICES 2\nEDGES 1\n1 0 2\n"), 3);
        assert_eq!(line_of("VERTICES 2\nEDGES 1\n1 1 2\nFACES 1\n"), 5);
        assert_eq!(line_of("VERTICES 2\nEDGES 1\n1 1 2\nFACES 0\nextra\n"), 5);
    }

    #[test]
    fn validation_errors_pass_through() {
        let text = "VERTICES 2\nEDGES 3\n1 1 2\n2 1 2\n3 1 2\nFACES 2\n1 1 2\n2 2 3\n";
        assert!(matches!(Cellulation::parse(text), Err(Error::Cellulation(_))));
    }
}
