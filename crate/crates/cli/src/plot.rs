use std::collections::BTreeSet;
use std::fmt::Write;

const UNIT: usize = 24;
const MARGIN: usize = 48;

/// `r,p` rows under a header.
pub fn to_csv(points: &BTreeSet<(usize, usize)>) -> String {
    let mut s = String::from("r,p\n");
    for (r, p) in points {
        let _ = writeln!(s, "{r},{p}");
    }
    s
}

/// A scatter of `(r, p)` pairs with `r = reg` on the horizontal axis and
/// `p = pdim` on the vertical axis.
pub fn to_svg(n: usize, points: &BTreeSet<(usize, usize)>) -> String {
    let max_r = points.iter().map(|p| p.0).max().unwrap_or(0) + 1;
    let max_p = points.iter().map(|p| p.1).max().unwrap_or(0) + 1;
    let width = 2 * MARGIN + max_r * UNIT + 64;
    let height = 2 * MARGIN + max_p * UNIT + 24;
    let ox = MARGIN;
    let oy = height - MARGIN;
    let x = |r: usize| ox + r * UNIT;
    let y = |p: usize| oy - p * UNIT;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<text x="{}" y="20" text-anchor="middle">n = {n}</text>"#, width / 2);
    let _ = writeln!(s, r#"<line x1="{}" y1="{oy}" x2="{}" y2="{oy}" stroke="black"/>"#, ox - 8, x(max_r));
    let _ = writeln!(s, r#"<line x1="{ox}" y1="{}" x2="{ox}" y2="{}" stroke="black"/>"#, oy + 8, y(max_p));
    let _ = writeln!(s, r#"<text x="{}" y="{}">r = reg</text>"#, x(max_r) + 6, oy + 4);
    let _ = writeln!(s, r#"<text x="{ox}" y="{}" text-anchor="middle">p = pdim</text>"#, y(max_p) - 8);
    for r in 1..max_r {
        let _ = writeln!(
            s,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="black"/>"#,
            x(r),
            oy - 3,
            oy + 3
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{r}</text>"#, x(r), oy + 18);
    }
    for p in 1..max_p {
        let _ = writeln!(
            s,
            r#"<line x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="black"/>"#,
            ox - 3,
            y(p),
            ox + 3
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{p}</text>"#, ox - 6, y(p) + 4);
    }
    for &(r, p) in points {
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#, x(r), y(p));
    }
    s.push_str("</svg>\n");
    s
}

/// The point with the largest `p`, ties broken by larger `r`.
pub fn max_point(points: &BTreeSet<(usize, usize)>) -> Option<(usize, usize)> {
    points.iter().copied().max_by_key(|&(r, p)| (p, r))
}
