//! Canonical text format.
//!
//! ```text
//! tourney <n> <k>
//! cycle <len> c0 c1 ... c(len-1)
//! ```
//!
//! Cells are row-major indices. Each cycle starts at its minimum cell,
//! runs toward the smaller of that cell's two neighbors, and cycles are
//! sorted by their first cell; lines end with a single LF. Rendering a
//! parsed cover reproduces the input byte for byte.

use crate::cover::CycleCover;
use crate::error::{Error, Result};

/// Serializes a validated cover in canonical form.
pub fn write_text(g: &CycleCover) -> Result<String> {
    g.validate(false)?;
    let cycles = g.cycles()?;
    let mut out = format!("tourney {} {}\n", g.n(), cycles.len());
    for cycle in cycles {
        out.push_str(&format!("cycle {}", cycle.len()));
        for cell in cycle {
            out.push(' ');
            out.push_str(&cell.to_string());
        }
        out.push('\n');
    }
    Ok(out)
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        message: message.into(),
    }
}

/// Parses and validates the canonical text format.
pub fn read_text(text: &str) -> Result<CycleCover> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing header"))?;
    let fields: Vec<&str> = header.split(' ').collect();
    let [kw, n_str, k_str] = fields[..] else {
        return Err(parse_error(1, "header must be 'tourney <n> <k>'"));
    };
    if kw != "tourney" {
        return Err(parse_error(1, "header must start with 'tourney'"));
    }
    let n: usize = n_str
        .parse()
        .map_err(|_| parse_error(1, "bad board size"))?;
    let k: usize = k_str
        .parse()
        .map_err(|_| parse_error(1, "bad cycle count"))?;
    if n == 0 {
        return Err(parse_error(1, "board size must be positive"));
    }

    let mut g = CycleCover::empty(n);
    let mut used = vec![false; n * n];
    let mut parsed = 0usize;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if parsed == k {
            return Err(parse_error(lineno, "more cycles than the header claims"));
        }
        let mut fields = line.split(' ');
        if fields.next() != Some("cycle") {
            return Err(parse_error(lineno, "expected 'cycle <len> cells...'"));
        }
        let len: usize = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| parse_error(lineno, "bad cycle length"))?;
        if len < 4 {
            return Err(parse_error(lineno, "cycles have at least 4 cells"));
        }
        let mut cells = Vec::with_capacity(len);
        for field in fields {
            let cell: usize = field
                .parse()
                .map_err(|_| parse_error(lineno, format!("bad cell '{field}'")))?;
            if cell >= n * n {
                return Err(parse_error(lineno, format!("cell {cell} off the board")));
            }
            if used[cell] {
                return Err(parse_error(lineno, format!("cell {cell} repeated")));
            }
            used[cell] = true;
            cells.push(cell);
        }
        if cells.len() != len {
            return Err(parse_error(
                lineno,
                format!("expected {len} cells, found {}", cells.len()),
            ));
        }
        for i in 0..cells.len() {
            g.add_edge(cells[i], cells[(i + 1) % cells.len()]);
        }
        parsed += 1;
    }
    if parsed != k {
        return Err(parse_error(
            parsed + 1,
            format!("header claims {k} cycles, found {parsed}"),
        ));
    }
    g.validate(false)?;
    Ok(g)
}
