//! Plain text inputs: census lists, weight vectors and cycle lists.

use crate::error::TriangulationError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// One census string per line; blank lines and `#` comments skipped.
pub fn read_census_list(text: &str) -> Vec<String> {
    content_lines(text).map(|(_, l)| l.to_string()).collect()
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<i64>, TriangulationError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| TriangulationError::Format { line, msg: format!("not an integer: `{t}`") })
        })
        .collect()
}

/// Whitespace or comma separated integers, possibly over several lines.
pub fn read_weights(text: &str) -> Result<Vec<i64>, TriangulationError> {
    let mut out = Vec::new();
    for (i, l) in content_lines(text) {
        out.extend(parse_ints(i, l)?);
    }
    Ok(out)
}

/// One face vector per line.
pub fn read_cycles(text: &str) -> Result<Vec<Vec<i64>>, TriangulationError> {
    content_lines(text).map(|(i, l)| parse_ints(i, l)).collect()
}

/// Comma separated cusp indices, as in `0,2`.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>, TriangulationError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| TriangulationError::Format { line: 1, msg: format!("not an index: `{t}`") })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blanks() {
        let l = read_census_list("# header\ncPcbbbiht_12\n\n  dLQacccjsnk_200 # trailing\n");
        assert_eq!(l, ["cPcbbbiht_12", "dLQacccjsnk_200"]);
    }

    #[test]
    fn weights_and_cycles() {
        assert_eq!(read_weights("1 1\n1,1\n").unwrap(), [1, 1, 1, 1]);
        assert_eq!(read_cycles("1 -1 0\n0 0 2").unwrap(), [vec![1, -1, 0], vec![0, 0, 2]]);
        assert!(read_weights("1 x").is_err());
        assert_eq!(parse_index_list("0, 2").unwrap(), [0, 2]);
    }
}
