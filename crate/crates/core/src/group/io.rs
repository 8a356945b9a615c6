//! Generator files.
//!
//! ```text
//! # comment
//! degree k
//! i_0 i_1 ... i_{k-1}     (one image list per generator)
//! ```

use std::fmt::Write;

use super::{PermGroup, Permutation};
use crate::parse::{content_lines, parse_usize, ParseError};

pub fn parse_generators(text: &str) -> Result<PermGroup, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "missing \"degree k\" header"))?;
    let degree = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["degree", k] => parse_usize(header_line, k, "degree")?,
        _ => return Err(ParseError::new(header_line, "header must be \"degree k\"")),
    };
    let mut gens = Vec::new();
    for (line, content) in lines {
        let images = content
            .split_whitespace()
            .map(|t| parse_usize(line, t, "point"))
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != degree {
            return Err(ParseError::new(
                line,
                format!("expected {degree} images, found {}", images.len()),
            ));
        }
        let perm =
            Permutation::from_images(images).map_err(|e| ParseError::new(line, e.to_string()))?;
        gens.push(perm);
    }
    Ok(PermGroup::new(degree, gens).expect("degrees checked per line"))
}

pub fn write_generators(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        let line: Vec<String> = g.images().iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::pgammal_2_8;

    #[test]
    fn round_trip() {
        let g = pgammal_2_8();
        let parsed = parse_generators(&write_generators(&g)).unwrap();
        assert_eq!(parsed.generators(), g.generators());
        assert_eq!(parsed.order(), 1512);
    }

    #[test]
    fn empty_generator_list() {
        let g = parse_generators("# trivial\ndegree 5\n").unwrap();
        assert_eq!((g.degree(), g.order()), (5, 1));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_generators("").unwrap_err().line, 0);
        assert_eq!(parse_generators("deg 3\n").unwrap_err().line, 1);
        assert_eq!(parse_generators("degree 3\n0 1\n").unwrap_err().line, 2);
        assert_eq!(
            parse_generators("degree 3\n1 2 0\n0 0 1\n")
                .unwrap_err()
                .line,
            3
        );
    }
}
