//! Deterministic SVG rendering of a polygon and labelled center markers.

use std::fmt::Write as _;

use polycenter::{Point2, Polygon};

/// Coordinates are printed with this many significant digits.
const SVG_DIGITS: usize = 9;

fn num(x: f64) -> String {
    let r: f64 = format!("{:.*e}", SVG_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    // avoid "-0"
    format!("{}", if r == 0.0 { 0.0 } else { r })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// The y axis is flipped so the picture has the usual orientation. The view
/// box is the bounding box of the outline and markers, padded by 10% of its
/// larger side.
pub fn render(p: &Polygon, markers: &[(String, Point2)]) -> String {
    let pts: Vec<Point2> = p
        .vertices()
        .iter()
        .copied()
        .chain(markers.iter().map(|m| m.1))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for q in &pts {
        x0 = x0.min(q.x);
        x1 = x1.max(q.x);
        y0 = y0.min(q.y);
        y1 = y1.max(q.y);
    }
    let side = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let m = 0.1 * side;
    let (vx, vy, vw, vh) = (x0 - m, -y1 - m, x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m);
    let size = vw.max(vh);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    );
    let mut d = String::new();
    for (i, v) in p.vertices().iter().enumerate() {
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, num(v.x), num(-v.y));
    }
    d.push('Z');
    let _ = writeln!(
        s,
        r#"  <path d="{d}" fill="none" stroke="black" stroke-width="{}" stroke-linejoin="round"/>"#,
        num(0.005 * size)
    );
    for (label, c) in markers {
        let _ = writeln!(
            s,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="red"/>"#,
            num(c.x),
            num(-c.y),
            num(0.012 * size)
        );
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-size="{}" font-family="sans-serif">{}</text>"#,
            num(c.x + 0.02 * size),
            num(-c.y - 0.02 * size),
            num(0.04 * size),
            escape(label)
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    #[test]
    fn centroid_marker_sits_at_viewport_center() {
        let s = render(&square(), &[("centroid".into(), Point2::new(0.5, 0.5))]);
        assert!(s.contains(r#"viewBox="-0.1 -1.1 1.2 1.2""#), "{s}");
        // viewport center is (-0.1 + 0.6, -1.1 + 0.6)
        assert!(s.contains(r#"<circle cx="0.5" cy="-0.5""#), "{s}");
        assert!(s.contains(">centroid</text>"));
    }

    #[test]
    fn outline_only_and_escaping() {
        let s = render(&square(), &[]);
        assert!(!s.contains("<circle"));
        assert!(s.contains(r#"d="M0 0 L1 0 L1 -1 L0 -1 Z""#), "{s}");
        let s = render(&square(), &[("a<b & c".into(), Point2::new(0.2, 0.2))]);
        assert!(s.contains("a&lt;b &amp; c"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let p = Polygon::from_xy(&[(0.1, 0.2), (3.3, -1.0), (2.0, 4.0), (-1.0, 2.5)]).unwrap();
        let marks = vec![("x".to_string(), Point2::new(1.0 / 3.0, 0.7))];
        assert_eq!(render(&p, &marks), render(&p.clone(), &marks.clone()));
    }
}
