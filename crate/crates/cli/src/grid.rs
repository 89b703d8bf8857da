//! φ values and grids.
//!
//! A value is a float in radians or a multiple of π with a `pi` suffix
//! (`0.5pi`, `-pi`, `2pi`). A grid is either a comma list of values or
//! `start:end:count`, `count` points spaced evenly with both ends included.

use std::f64::consts::PI;

use anyhow::{bail, Context, Result};

pub fn parse_phi(text: &str) -> Result<f64> {
    let t = text.trim();
    let value = match t.strip_suffix("pi") {
        Some("") | Some("+") => PI,
        Some("-") => -PI,
        Some(coeff) => {
            coeff
                .parse::<f64>()
                .with_context(|| format!("bad φ value {text:?}"))?
                * PI
        }
        None => t
            .parse::<f64>()
            .with_context(|| format!("bad φ value {text:?}"))?,
    };
    if !value.is_finite() {
        bail!("φ value {text:?} is not finite");
    }
    Ok(value)
}

pub fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let grid = match parts.as_slice() {
        [single] => single
            .split(',')
            .map(parse_phi)
            .collect::<Result<Vec<_>>>()?,
        [start, end, count] => {
            let (a, b) = (parse_phi(start)?, parse_phi(end)?);
            let count: usize = count
                .trim()
                .parse()
                .with_context(|| format!("bad point count in {text:?}"))?;
            match count {
                0 => Vec::new(),
                1 => vec![a],
                _ => (0..count)
                    .map(|k| a + (b - a) * k as f64 / (count - 1) as f64)
                    .collect(),
            }
        }
        _ => bail!("φ grid must be a comma list or start:end:count, got {text:?}"),
    };
    if grid.is_empty() {
        bail!("φ grid {text:?} is empty");
    }
    Ok(grid)
}
