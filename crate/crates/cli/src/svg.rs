//! Minimal SVG line plot of a sampled response.

use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 48.0;

/// Plots `H` against `λ`, with the vertical axis fixed to `[0, 1]`.
pub fn plot(samples: &[(f64, f64)], title: &str) -> String {
    let (x0, x1) = samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &(x, _)| (a.min(x), b.max(x)));
    let span = if x1 > x0 { x1 - x0 } else { 1.0 };
    let (pw, ph) = (WIDTH - 2.0 * MARGIN, HEIGHT - 2.0 * MARGIN);
    let px = |x: f64| MARGIN + (x - x0) / span * pw;
    let py = |y: f64| MARGIN + (1.0 - y.clamp(0.0, 1.0)) * ph;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        MARGIN / 2.0,
        escape(title)
    );
    // Axes with end labels.
    let _ = writeln!(
        s,
        r#"<path d="M{l} {t} L{l} {b} L{r} {b}" stroke="black" fill="none"/>"#,
        l = MARGIN,
        t = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    );
    for (text, x, y, anchor) in [
        (format!("{x0}"), px(x0), HEIGHT - MARGIN + 16.0, "middle"),
        (format!("{x1}"), px(x1), HEIGHT - MARGIN + 16.0, "middle"),
        ("0".to_string(), MARGIN - 6.0, py(0.0) + 4.0, "end"),
        ("1".to_string(), MARGIN - 6.0, py(1.0) + 4.0, "end"),
        ("λ".to_string(), WIDTH / 2.0, HEIGHT - 12.0, "middle"),
    ] {
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="12" text-anchor="{anchor}">{text}</text>"#
        );
    }
    let points: Vec<String> = samples
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline points="{}" stroke="steelblue" stroke-width="1.5" fill="none"/>"#,
        points.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_polyline_point_per_sample() {
        let svg = plot(&[(0.0, 1.0), (1.0, 0.5), (2.0, 0.0)], "a < b");
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        let line = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        assert_eq!(line.matches(',').count(), 3);
        assert!(line.contains("48.00,48.00") && line.contains("592.00,352.00"));
        assert!(svg.contains("a &lt; b"));
    }
}
