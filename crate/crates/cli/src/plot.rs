//! Minimal hand-rolled SVG emitters for the --plot flag.

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN: f64 = 45.0;

fn header() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

fn axes(title: &str) -> String {
    format!(
        "<rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{w}\" height=\"{h}\" fill=\"none\" \
         stroke=\"#888\" stroke-width=\"1\"/>\n\
         <text x=\"{tx}\" y=\"24\" font-family=\"monospace\" font-size=\"15\" \
         text-anchor=\"middle\">{title}</text>\n",
        w = WIDTH - 2.0 * MARGIN,
        h = HEIGHT - 2.0 * MARGIN,
        tx = WIDTH / 2.0,
    )
}

fn scale(points: &[(f64, f64)]) -> impl Fn(f64, f64) -> (f64, f64) + '_ {
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if x1 <= x0 {
        x1 = x0 + 1.0;
    }
    if y1 <= y0 {
        y1 = y0 + 1.0;
    }
    move |x: f64, y: f64| {
        (
            MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN),
            HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN),
        )
    }
}

/// Polyline plot of one series.
pub fn line_plot(title: &str, points: &[(f64, f64)]) -> String {
    let mut svg = header() + &axes(title);
    if !points.is_empty() {
        let to = scale(points);
        let path: Vec<String> = points
            .iter()
            .map(|&(x, y)| {
                let (px, py) = to(x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"#0b62a4\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            path.join(" ")
        ));
    }
    svg + "</svg>\n"
}

/// Scatter plot (bifurcation scans).
pub fn scatter_plot(title: &str, points: &[(f64, f64)]) -> String {
    let mut svg = header() + &axes(title);
    let to = scale(points);
    for &(x, y) in points {
        let (px, py) = to(x, y);
        svg.push_str(&format!(
            "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"1.1\" fill=\"#0b62a4\"/>\n"
        ));
    }
    svg + "</svg>\n"
}

/// Triangular heat map over lightcone coordinates; `cells` are
/// `(a, b, intensity)` with intensity already in [0, 1].
pub fn lightcone_heat_map(title: &str, horizon: usize, cells: &[(usize, usize, f64)]) -> String {
    let mut svg = header() + &axes(title);
    let span = (horizon + 1) as f64;
    let cell = ((WIDTH - 2.0 * MARGIN) / span).min((HEIGHT - 2.0 * MARGIN) / span);
    for &(a, b, intensity) in cells {
        // time upward, space across
        let t = (a + b) as f64;
        let x = (b as f64 - a as f64 + span) / 2.0;
        let shade = (255.0 * (1.0 - intensity)) as u8;
        let px = MARGIN + x * cell;
        let py = HEIGHT - MARGIN - (t + 1.0) * cell;
        svg.push_str(&format!(
            "<rect x=\"{px:.2}\" y=\"{py:.2}\" width=\"{w:.2}\" height=\"{w:.2}\" \
             fill=\"rgb({shade},{shade},255)\"/>\n",
            w = cell * 0.95
        ));
    }
    svg + "</svg>\n"
}
