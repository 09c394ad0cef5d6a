//! Deterministic SVG rendering of PL maps on the unit square.
//!
//! Pixel coordinates are computed from the exact rational breakpoints and
//! rounded to hundredths with exact arithmetic, so the output bytes depend
//! only on the input maps and the requested size.

use num_bigint::BigInt;

use plof::rational::{rat_int, Rational};
use plof::PLMap;

const MARGIN: i64 = 48;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// Exact fixed-point formatting: the value rounded half-up to hundredths.
fn px(value: &Rational) -> String {
    let scaled = value * Rational::from_integer(100.into())
        + Rational::new(1.into(), 2.into());
    let rounded = scaled.floor().to_integer();
    let hundred = BigInt::from(100);
    let int = &rounded / &hundred;
    let frac = &rounded % &hundred;
    format!("{}.{:02}", int, frac)
}

struct Frame {
    width: u32,
    height: u32,
}

impl Frame {
    fn x(&self, v: &Rational) -> String {
        let span = rat_int(self.width as i64 - 2 * MARGIN);
        px(&(rat_int(MARGIN) + v * span))
    }

    fn y(&self, v: &Rational) -> String {
        let span = rat_int(self.height as i64 - 2 * MARGIN);
        px(&(rat_int(self.height as i64 - MARGIN) - v * span))
    }
}

/// Renders the named maps: the unit square, gridlines at the dyadic
/// fourths, one polyline per map with its breakpoints marked, and a legend.
pub fn render(maps: &[(String, PLMap)], width: u32, height: u32) -> String {
    let fr = Frame { width, height };
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = width,
        h = height
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // gridlines at 0, 1/4, 1/2, 3/4, 1 with labels on the axes
    for i in 0..=4i64 {
        let v = Rational::new(i.into(), 4.into());
        let (x, y) = (fr.x(&v), fr.y(&v));
        let (x0, x1) = (fr.x(&rat_int(0)), fr.x(&rat_int(1)));
        let (y0, y1) = (fr.y(&rat_int(0)), fr.y(&rat_int(1)));
        let style = if i == 0 || i == 4 {
            "stroke=\"#444444\" stroke-width=\"1\""
        } else {
            "stroke=\"#cccccc\" stroke-width=\"1\" stroke-dasharray=\"3 3\""
        };
        out.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{y0}\" x2=\"{x}\" y2=\"{y1}\" {style}/>\n"
        ));
        out.push_str(&format!(
            "<line x1=\"{x0}\" y1=\"{y}\" x2=\"{x1}\" y2=\"{y}\" {style}/>\n"
        ));
        let label = match i {
            0 => "0",
            1 => "1/4",
            2 => "1/2",
            3 => "3/4",
            _ => "1",
        };
        out.push_str(&format!(
            "<text x=\"{x}\" y=\"{by}\" font-size=\"11\" text-anchor=\"middle\" fill=\"#444444\">{label}</text>\n",
            by = px(&rat_int(height as i64 - MARGIN + 16)),
        ));
        out.push_str(&format!(
            "<text x=\"{lx}\" y=\"{y}\" font-size=\"11\" text-anchor=\"end\" fill=\"#444444\">{label}</text>\n",
            lx = px(&rat_int(MARGIN - 8)),
        ));
    }

    for (i, (name, map)) in maps.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = map
            .breakpoints()
            .iter()
            .map(|(x, y)| format!("{},{}", fr.x(x), fr.y(y)))
            .collect();
        out.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            points.join(" "),
            color
        ));
        for (x, y) in map.breakpoints() {
            out.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n",
                fr.x(x),
                fr.y(y),
                color
            ));
        }
        out.push_str(&format!(
            "<text x=\"{x}\" y=\"{y}\" font-size=\"12\" fill=\"{color}\">{name}</text>\n",
            x = px(&rat_int(MARGIN + 6)),
            y = px(&rat_int(MARGIN - 10 - 14 * i as i64)),
        ));
    }

    out.push_str("</svg>\n");
    out
}
