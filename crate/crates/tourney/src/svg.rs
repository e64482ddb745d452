//! SVG rendering: one closed polygon per cycle between cell centers, an
//! optional grid, and optional cell dots. Documents are self-contained
//! and reference no external resources.

use crate::cover::CycleCover;
use crate::error::Result;

/// Per-cycle stroke colors, reused round robin.
const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

#[derive(Clone, Copy, Debug)]
pub struct SvgOptions {
    /// Cell pitch in user units.
    pub pitch: f64,
    pub grid: bool,
    pub dots: bool,
}

impl Default for SvgOptions {
    fn default() -> SvgOptions {
        SvgOptions {
            pitch: 16.0,
            grid: false,
            dots: false,
        }
    }
}

/// Renders a validated cover as an SVG document.
pub fn write_svg(g: &CycleCover, opts: &SvgOptions) -> Result<String> {
    g.validate(false)?;
    let cycles = g.cycles()?;
    let n = g.n();
    let board = g.board();
    let pitch = opts.pitch;
    let size = pitch * n as f64;
    let center = |cell: usize| {
        (
            board.col(cell) as f64 * pitch + pitch / 2.0,
            board.row(cell) as f64 * pitch + pitch / 2.0,
        )
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!(
        "<rect width=\"{size}\" height=\"{size}\" fill=\"#ffffff\"/>\n"
    ));
    if opts.grid {
        for i in 0..=n {
            let p = i as f64 * pitch;
            out.push_str(&format!(
                "<line x1=\"{p}\" y1=\"0\" x2=\"{p}\" y2=\"{size}\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n"
            ));
            out.push_str(&format!(
                "<line x1=\"0\" y1=\"{p}\" x2=\"{size}\" y2=\"{p}\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n"
            ));
        }
    }
    for (i, cycle) in cycles.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = cycle
            .iter()
            .map(|&c| {
                let (x, y) = center(c);
                format!("{x},{y}")
            })
            .collect();
        out.push_str(&format!(
            "<polygon points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\" stroke-linejoin=\"round\"/>\n",
            points.join(" "),
            pitch / 8.0
        ));
    }
    if opts.dots {
        for cell in 0..board.cells() {
            let (x, y) = center(cell);
            out.push_str(&format!(
                "<circle cx=\"{x}\" cy=\"{y}\" r=\"{}\" fill=\"#404040\"/>\n",
                pitch / 10.0
            ));
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::diamond_cover_4;

    /// Minimal well-formedness check: tags balance and attributes stay
    /// quoted. Good enough to catch broken string assembly.
    fn assert_well_formed(doc: &str) {
        let mut stack: Vec<String> = Vec::new();
        let mut rest = doc;
        while let Some(start) = rest.find('<') {
            let end = rest[start..].find('>').expect("unclosed tag") + start;
            let tag = &rest[start + 1..end];
            rest = &rest[end + 1..];
            if let Some(name) = tag.strip_prefix('/') {
                assert_eq!(stack.pop().as_deref(), Some(name), "tag mismatch");
            } else if !tag.ends_with('/') && !tag.starts_with('?') {
                let name: String = tag.split_whitespace().next().unwrap().to_string();
                stack.push(name);
            }
            assert_eq!(tag.matches('"').count() % 2, 0, "unbalanced quotes");
        }
        assert!(stack.is_empty(), "unclosed tags: {stack:?}");
    }

    #[test]
    fn diamond_svg_has_four_polygons() {
        let doc = write_svg(&diamond_cover_4(), &SvgOptions::default()).unwrap();
        assert_eq!(doc.matches("<polygon").count(), 4);
        assert_well_formed(&doc);
    }

    #[test]
    fn tour_svg_has_one_polygon_with_all_cells() {
        let g = crate::generators::tiled_tourney(6).unwrap();
        let doc = write_svg(&g, &SvgOptions::default()).unwrap();
        assert_eq!(doc.matches("<polygon").count(), 1);
        let points = doc
            .split("points=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        assert_eq!(points.split(' ').count(), 36);
    }

    #[test]
    fn no_external_references() {
        let g = crate::generators::braided_tourney(8).unwrap();
        let doc = write_svg(
            &g,
            &SvgOptions {
                grid: true,
                dots: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!doc.contains("href"));
        assert!(!doc.contains("url("));
        assert_well_formed(&doc);
    }

    #[test]
    fn options_change_output() {
        let g = diamond_cover_4();
        let plain = write_svg(&g, &SvgOptions::default()).unwrap();
        let dotted = write_svg(
            &g,
            &SvgOptions {
                dots: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_ne!(plain, dotted);
        assert_eq!(dotted.matches("<circle").count(), 16);
    }
}
