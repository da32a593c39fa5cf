use std::fmt::Write;

const W: f64 = 640.0;
const H: f64 = 480.0;
const M: f64 = 48.0;

/// Minimal deterministic SVG plot: fixed canvas, fixed number formatting.
pub struct Plot {
    x: (f64, f64),
    y: (f64, f64),
    body: String,
    title: String,
}

fn n(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl Plot {
    pub fn new(title: &str, x: (f64, f64), y: (f64, f64)) -> Plot {
        let widen = |(a, b): (f64, f64)| if (b - a).abs() < 1e-12 { (a - 0.5, b + 0.5) } else { (a, b) };
        Plot { x: widen(x), y: widen(y), body: String::new(), title: title.to_string() }
    }

    fn px(&self, x: f64) -> f64 {
        M + (x - self.x.0) / (self.x.1 - self.x.0) * (W - 2.0 * M)
    }

    fn py(&self, y: f64) -> f64 {
        H - M - (y - self.y.0) / (self.y.1 - self.y.0) * (H - 2.0 * M)
    }

    pub fn rect(&mut self, x0: f64, y0: f64, x1: f64, y1: f64, fill: &str) {
        let (a, b) = (self.px(x0), self.px(x1));
        let (c, d) = (self.py(y1), self.py(y0));
        let _ = writeln!(
            self.body,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{fill}"/>"#,
            n(a),
            n(c),
            n((b - a).max(0.5)),
            n((d - c).max(0.5))
        );
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str, dashed: bool) {
        let pts: Vec<String> =
            pts.iter().filter(|p| p.0.is_finite() && p.1.is_finite()).map(|&(x, y)| format!("{},{}", n(self.px(x)), n(self.py(y)))).collect();
        if pts.len() < 2 {
            return;
        }
        let dash = if dashed { r#" stroke-dasharray="6,4""# } else { "" };
        let _ = writeln!(self.body, r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="1.2"{dash}/>"#, pts.join(" "));
    }

    pub fn hline(&mut self, y: f64, stroke: &str, dashed: bool) {
        self.polyline(&[(self.x.0, y), (self.x.1, y)], stroke, dashed);
    }

    pub fn vline(&mut self, x: f64, stroke: &str, dashed: bool) {
        self.polyline(&[(x, self.y.0), (x, self.y.1)], stroke, dashed);
    }

    pub fn points(&mut self, pts: &[(f64, f64)], fill: &str) {
        for &(x, y) in pts.iter().filter(|p| p.0.is_finite() && p.1.is_finite()) {
            let _ = writeln!(self.body, r#"<circle cx="{}" cy="{}" r="1.6" fill="{fill}"/>"#, n(self.px(x)), n(self.py(y)));
        }
    }

    pub fn finish(self) -> Vec<u8> {
        let mut s = String::new();
        let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
        let _ = writeln!(s, r#"<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<rect x="{M}" y="{M}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            W - 2.0 * M,
            H - 2.0 * M
        );
        let _ = writeln!(s, r#"<text x="{}" y="24" font-size="14" text-anchor="middle">{}</text>"#, W / 2.0, esc(&self.title));
        let tick = |v: f64| format!("{v:.4}");
        let _ = writeln!(s, r#"<text x="{M}" y="{}" font-size="10">{}</text>"#, H - M + 14.0, tick(self.x.0));
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{}</text>"#, W - M, H - M + 14.0, tick(self.x.1));
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{}</text>"#, M - 4.0, H - M, tick(self.y.0));
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{}</text>"#, M - 4.0, M + 8.0, tick(self.y.1));
        s.push_str(&self.body);
        s.push_str("</svg>\n");
        s.into_bytes()
    }
}
