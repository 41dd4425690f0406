//! SVG rendering of slope-data graphs: the pressure path in purple with the
//! left side mirrored, the one-sided envelopes in red, and the hull
//! envelopes with chord tails in yellow, over a light lattice grid.

use num_rational::BigRational;
use num_traits::ToPrimitive;

use klrw::combinatorics::PLFunction;

const SCALE: f64 = 40.0;

fn fx(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

struct Canvas {
    width: f64,
    height: f64,
    ox: f64,
    oy: f64,
    body: String,
}

impl Canvas {
    fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Self {
        let pad = 1.0;
        let width = (xmax - xmin + 2.0 * pad) * SCALE;
        let height = (ymax - ymin + 2.0 * pad) * SCALE;
        Canvas {
            width,
            height,
            ox: (pad - xmin) * SCALE,
            oy: (ymax + pad) * SCALE,
            body: String::new(),
        }
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        (self.ox + x * SCALE, self.oy - y * SCALE)
    }

    fn polyline(&mut self, pts: &[(f64, f64)], color: &str, width: f64) {
        if pts.len() < 2 {
            return;
        }
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| {
                let (px, py) = self.px(x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        self.body.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"/>\n",
            coords.join(" ")
        ));
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"0 0 {:.0} {:.0}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.width, self.height, self.width, self.height, self.body
        )
    }
}

/// Sample a piecewise-linear function, mirrored when `mirror` is set, up to
/// `reach` on the x axis.
fn plf_points(f: &PLFunction, mirror: bool, reach: f64) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = f
        .breakpoints
        .iter()
        .map(|(x, y)| (fx(x), fx(y)))
        .collect();
    let last = *pts.last().unwrap();
    if reach > last.0 {
        let slope = fx(&f.tail_slope);
        pts.push((reach, last.1 + slope * (reach - last.0)));
    }
    if mirror {
        for p in pts.iter_mut() {
            p.0 = -p.0;
        }
    }
    pts
}

pub struct SlopeGraph<'a> {
    pub left_path: &'a PLFunction,
    pub right_path: &'a PLFunction,
    pub f_minus: &'a PLFunction,
    pub f_plus: &'a PLFunction,
    pub g_minus: &'a PLFunction,
    pub g_plus: &'a PLFunction,
}

pub fn render(graph: &SlopeGraph) -> String {
    let reach_l = fx(graph.left_path.last_x()) + 2.0;
    let reach_r = fx(graph.right_path.last_x()) + 2.0;
    let all: Vec<Vec<(f64, f64)>> = vec![
        plf_points(graph.left_path, true, 0.0),
        plf_points(graph.right_path, false, 0.0),
        plf_points(graph.f_minus, true, reach_l),
        plf_points(graph.f_plus, false, reach_r),
        plf_points(graph.g_minus, true, reach_l),
        plf_points(graph.g_plus, false, reach_r),
    ];
    let mut ymin = -1.0f64;
    let mut ymax = 1.0f64;
    for pts in &all {
        for &(_, y) in pts {
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    let mut canvas = Canvas::new(-reach_l, reach_r, ymin, ymax);
    // lattice grid
    let mut x = -reach_l.ceil();
    while x <= reach_r.ceil() {
        let pts = [(x, ymin - 0.5), (x, ymax + 0.5)];
        canvas.polyline(&pts, "#dddddd", 1.0);
        x += 1.0;
    }
    let mut y = (ymin - 0.5).floor();
    while y <= (ymax + 0.5).ceil() {
        let pts = [(-reach_l, y), (reach_r, y)];
        canvas.polyline(&pts, "#dddddd", 1.0);
        y += 1.0;
    }
    // axes
    canvas.polyline(&[(-reach_l, 0.0), (reach_r, 0.0)], "#555555", 1.5);
    canvas.polyline(&[(0.0, ymin - 0.5), (0.0, ymax + 0.5)], "#555555", 1.5);
    // yellow hull envelopes underneath
    canvas.polyline(&plf_points(graph.g_minus, true, reach_l), "#d4b106", 3.0);
    canvas.polyline(&plf_points(graph.g_plus, false, reach_r), "#d4b106", 3.0);
    // red one-sided envelopes
    canvas.polyline(&plf_points(graph.f_minus, true, reach_l), "#cc2222", 3.0);
    canvas.polyline(&plf_points(graph.f_plus, false, reach_r), "#cc2222", 3.0);
    // purple pressure path on top
    canvas.polyline(&plf_points(graph.left_path, true, 0.0), "#7a2ea8", 3.5);
    canvas.polyline(&plf_points(graph.right_path, false, 0.0), "#7a2ea8", 3.5);
    canvas.finish()
}
