//! Static SVG scatter plot with the fitted line.
//!
//! Output is a pure function of its inputs: coordinates are printed at three
//! decimals and nothing depends on time or locale. The root element records
//! the data ranges it maps (`data-x-range`, `data-y-range`) and the plot area
//! is the `rect.plot-area`, so a reader can invert the viewport transform.

use std::fmt::Write as _;

use crate::cloud::PointCloud;
use crate::error::{Error, Result};
use crate::regress::FitResult;
use crate::report::{format_decimal, Equation};

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 40.0;
const PAD: f64 = 0.05;

/// Linear map between data coordinates and pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub height: f64,
}

impl Viewport {
    pub fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            self.left + (x - x0) / (x1 - x0) * self.width,
            self.top + (y1 - y) / (y1 - y0) * self.height,
        )
    }

    pub fn to_data(&self, px: f64, py: f64) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            x0 + (px - self.left) / self.width * (x1 - x0),
            y1 - (py - self.top) / self.height * (y1 - y0),
        )
    }
}

fn min_max<'a>(values: impl Iterator<Item = &'a f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)))
}

fn padded(lo: f64, hi: f64) -> (f64, f64) {
    let span = hi - lo;
    let pad = if span > 0.0 {
        PAD * span
    } else {
        (PAD * lo.abs()).max(1.0)
    };
    (lo - pad, hi + pad)
}

/// x-extent of the drawn line: the data's x-range padded by 5% each side.
pub fn line_x_range(cloud: &PointCloud) -> (f64, f64) {
    let (lo, hi) = min_max(cloud.xs().iter());
    let pad = PAD * (hi - lo);
    (lo - pad, hi + pad)
}

pub fn viewport(cloud: &PointCloud, fit: &FitResult, width: u32, height: u32) -> Viewport {
    let x_range = padded(min_max(cloud.xs().iter()).0, min_max(cloud.xs().iter()).1);
    let (lx0, lx1) = line_x_range(cloud);
    let line_ys = [fit.predict(lx0), fit.predict(lx1)];
    let (ylo, yhi) = min_max(cloud.ys().iter().chain(line_ys.iter()));
    Viewport {
        x_range,
        y_range: padded(ylo, yhi),
        left: MARGIN_LEFT,
        top: MARGIN_TOP,
        width: width as f64 - MARGIN_LEFT - MARGIN_RIGHT,
        height: height as f64 - MARGIN_TOP - MARGIN_BOTTOM,
    }
}

fn px(v: f64) -> String {
    format!("{v:.3}")
}

/// Renders the cloud and its fitted line as an SVG document.
pub fn render_svg(cloud: &PointCloud, fit: &FitResult, width: u32, height: u32) -> Result<String> {
    if width < 100 || height < 100 {
        return Err(Error::PlotTooSmall { width, height });
    }
    let vp = viewport(cloud, fit, width, height);
    let (xlo, xhi) = min_max(cloud.xs().iter());
    let (ylo, yhi) = min_max(cloud.ys().iter());
    let bottom = vp.top + vp.height;
    let right = vp.left + vp.width;

    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" data-x-range="{} {}" data-y-range="{} {}">"#,
        vp.x_range.0, vp.x_range.1, vp.y_range.0, vp.y_range.1
    );
    let _ = writeln!(w, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(
        w,
        r##"<rect class="plot-area" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#dddddd"/>"##,
        px(vp.left),
        px(vp.top),
        px(vp.width),
        px(vp.height)
    );

    // Axes along the bottom and left of the plot area.
    let _ = writeln!(
        w,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(vp.left),
        px(bottom),
        px(right),
        px(bottom)
    );
    let _ = writeln!(
        w,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(vp.left),
        px(vp.top),
        px(vp.left),
        px(bottom)
    );

    // Min/max ticks at the data extremes.
    for x in [xlo, xhi] {
        let (tx, _) = vp.to_px(x, 0.0);
        let _ = writeln!(
            w,
            r#"<line class="tick" x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="black"/>"#,
            px(tx),
            px(bottom),
            px(bottom + 5.0)
        );
        let _ = writeln!(
            w,
            r#"<text class="tick-label" x="{}" y="{}" font-size="11" text-anchor="middle">{}</text>"#,
            px(tx),
            px(bottom + 18.0),
            format_decimal(x, 4)
        );
    }
    for y in [ylo, yhi] {
        let (_, ty) = vp.to_px(0.0, y);
        let _ = writeln!(
            w,
            r#"<line class="tick" x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="black"/>"#,
            px(vp.left - 5.0),
            px(ty),
            px(vp.left)
        );
        let _ = writeln!(
            w,
            r#"<text class="tick-label" x="{}" y="{}" font-size="11" text-anchor="end">{}</text>"#,
            px(vp.left - 8.0),
            px(ty + 4.0),
            format_decimal(y, 4)
        );
    }

    for (x, y) in cloud.points() {
        let (cx, cy) = vp.to_px(x, y);
        let _ = writeln!(
            w,
            r##"<circle class="point" cx="{}" cy="{}" r="3" fill="#1f77b4"/>"##,
            px(cx),
            px(cy)
        );
    }

    let (lx0, lx1) = line_x_range(cloud);
    let (x1, y1) = vp.to_px(lx0, fit.predict(lx0));
    let (x2, y2) = vp.to_px(lx1, fit.predict(lx1));
    let _ = writeln!(
        w,
        r##"<line class="fit" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#d62728" stroke-width="2"/>"##,
        px(x1),
        px(y1),
        px(x2),
        px(y2)
    );

    let eq = Equation {
        slope: fit.slope,
        intercept: fit.intercept,
    };
    let _ = writeln!(
        w,
        r#"<text class="equation" x="{}" y="{}" font-size="13">{eq}</text>"#,
        px(vp.left),
        px(vp.top - 10.0)
    );
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regress::fit;

    fn sample() -> (PointCloud, FitResult) {
        let c = PointCloud::from_pairs(&[(1.0, 2.0), (2.0, 2.5), (4.0, 5.0), (5.0, 4.0)]).unwrap();
        let f = fit(&c).unwrap();
        (c, f)
    }

    #[test]
    fn rejects_small_canvas() {
        let (c, f) = sample();
        assert_eq!(
            render_svg(&c, &f, 99, 300),
            Err(Error::PlotTooSmall { width: 99, height: 300 })
        );
        assert!(render_svg(&c, &f, 100, 100).is_ok());
    }

    #[test]
    fn viewport_round_trip() {
        let (c, f) = sample();
        let vp = viewport(&c, &f, 640, 480);
        for (x, y) in c.points() {
            let (px, py) = vp.to_px(x, y);
            let (bx, by) = vp.to_data(px, py);
            assert!((bx - x).abs() < 1e-12 && (by - y).abs() < 1e-12);
            assert!(px >= vp.left && px <= vp.left + vp.width);
            assert!(py >= vp.top && py <= vp.top + vp.height);
        }
    }

    #[test]
    fn element_counts() {
        let (c, f) = sample();
        let svg = render_svg(&c, &f, 640, 480).unwrap();
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches(r#"class="fit""#).count(), 1);
        assert_eq!(svg.matches(r#"class="axis""#).count(), 2);
        assert_eq!(svg.matches(r#"class="tick-label""#).count(), 4);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn horizontal_line_has_a_y_range() {
        let c = PointCloud::from_slices(&[1.0, 2.0, 3.0], &[4.0, 4.0, 4.0]).unwrap();
        let f = fit(&c).unwrap();
        let vp = viewport(&c, &f, 300, 200);
        assert!(vp.y_range.0 < 4.0 && vp.y_range.1 > 4.0);
        assert!(render_svg(&c, &f, 300, 200).is_ok());
    }
}
