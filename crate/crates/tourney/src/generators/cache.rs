//! On-disk cache for derived building blocks (block tours, braid rings,
//! the 6x6 center cover), controlled by the `TOURNEY_DATA_DIR`
//! environment variable. Files use the canonical text line discipline
//! with a shape-specific header; anything unreadable is recomputed and
//! rewritten.

use std::fs;
use std::path::PathBuf;

/// Environment variable pointing at the on-disk cache directory.
pub const DATA_DIR_ENV: &str = "TOURNEY_DATA_DIR";

fn data_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_ENV).map(PathBuf::from)
}

/// Serializes cycles as `<header>` then one `cycle <len> ...` line each.
fn render(header: &str, cycles: &[Vec<usize>]) -> String {
    let mut out = String::new();
    out.push_str(header);
    out.push('\n');
    for cycle in cycles {
        out.push_str(&format!("cycle {}", cycle.len()));
        for &c in cycle {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

fn parse(text: &str, header: &str) -> Option<Vec<Vec<usize>>> {
    let mut lines = text.lines();
    if lines.next()? != header {
        return None;
    }
    let mut cycles = Vec::new();
    for line in lines {
        let mut fields = line.split(' ');
        if fields.next()? != "cycle" {
            return None;
        }
        let len: usize = fields.next()?.parse().ok()?;
        let cells: Vec<usize> = fields.map(|f| f.parse().ok()).collect::<Option<_>>()?;
        if cells.len() != len {
            return None;
        }
        cycles.push(cells);
    }
    Some(cycles)
}

/// Loads cached cycles or derives and stores them. Cache misses, parse
/// failures, and write failures all fall back to `derive`.
pub(crate) fn load_or_derive(
    name: &str,
    header: &str,
    derive: impl FnOnce() -> Option<Vec<Vec<usize>>>,
) -> Option<Vec<Vec<usize>>> {
    let path = data_dir().map(|d| d.join(name));
    if let Some(path) = &path {
        if let Ok(text) = fs::read_to_string(path) {
            if let Some(cycles) = parse(&text, header) {
                return Some(cycles);
            }
        }
    }
    let cycles = derive()?;
    if let Some(path) = &path {
        if let Some(dir) = path.parent() {
            let _ = fs::create_dir_all(dir);
        }
        let _ = fs::write(path, render(header, &cycles));
    }
    Some(cycles)
}
