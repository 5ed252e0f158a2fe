use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};
use crate::fmt17;

/// Uniform grid `t0 + k h`, `k = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub t0: f64,
    pub h: f64,
    pub n: usize,
}

impl Grid {
    pub fn new(t0: f64, h: f64, n: usize) -> Result<Self> {
        if !t0.is_finite() || !(h > 0.0) || !h.is_finite() || n == 0 {
            return Err(Error::Input(format!(
                "grid needs finite t0, h > 0 and n >= 1 (got {t0}:{h}:{n})"
            )));
        }
        Ok(Grid { t0, h, n })
    }

    /// Grid from `lo` to `hi` inclusive with step close to `h`.
    pub fn spanning(lo: f64, hi: f64, h: f64) -> Result<Self> {
        let cells = ((hi - lo) / h).round().max(1.0) as usize;
        Grid::new(lo, (hi - lo) / cells as f64, cells + 1)
    }

    pub fn t(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.h
    }

    pub fn end(&self) -> f64 {
        self.t(self.n - 1)
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|k| self.t(k))
    }
}

/// Samples `values[k] = f(t0 + k h)`, read between nodes as the linear
/// interpolant.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(t0: f64, h: f64, values: Vec<f64>) -> Result<Self> {
        let grid = Grid::new(t0, h, values.len())?;
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                t: grid.t(k),
                value: values[k],
            });
        }
        Ok(SampledFunction { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid.t0, grid.h, grid.nodes().map(f).collect())
    }

    pub fn constant(grid: Grid, c: f64) -> Result<Self> {
        Self::new(grid.t0, grid.h, vec![c; grid.n])
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn t0(&self) -> f64 {
        self.grid.t0
    }

    pub fn h(&self) -> f64 {
        self.grid.h
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn t(&self, k: usize) -> f64 {
        self.grid.t(k)
    }

    pub fn end(&self) -> f64 {
        self.grid.end()
    }

    /// Linear interpolant; outside the grid the nearest end value.
    pub fn eval(&self, t: f64) -> f64 {
        let s = (t - self.grid.t0) / self.grid.h;
        if s <= 0.0 {
            return self.values[0];
        }
        let last = self.values.len() - 1;
        if s >= last as f64 {
            return self.values[last];
        }
        let k = s.floor() as usize;
        let w = s - k as f64;
        self.values[k] * (1.0 - w) + self.values[k + 1] * w
    }

    /// Trapezoid mean over the whole grid.
    pub fn mean(&self) -> f64 {
        let v = &self.values;
        if v.len() == 1 {
            return v[0];
        }
        let inner: f64 = v[1..v.len() - 1].iter().sum();
        (inner + 0.5 * (v[0] + v[v.len() - 1])) / (v.len() - 1) as f64
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(self.grid.t0, self.grid.h, self.values.iter().map(|&v| f(v)).collect())
    }

    /// `a * self + b * other` on a shared grid.
    pub fn combine(&self, a: f64, other: &SampledFunction, b: f64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::Input("sampled functions live on different grids".into()));
        }
        Self::new(
            self.grid.t0,
            self.grid.h,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        )
    }
}

/// Writes a `# grid` comment, the `t,value` header and one sample per line,
/// all with 17 significant digits.
pub fn write_sampled_csv<W: Write>(f: &SampledFunction, mut out: W) -> Result<()> {
    writeln!(
        out,
        "# grid t0={} h={} n={}",
        fmt17(f.t0()),
        fmt17(f.h()),
        f.len()
    )?;
    writeln!(out, "t,value")?;
    for (k, v) in f.values().iter().enumerate() {
        writeln!(out, "{},{}", fmt17(f.t(k)), fmt17(*v))?;
    }
    Ok(())
}

fn grid_comment(line: &str) -> Option<(f64, f64)> {
    let rest = line.strip_prefix("# grid")?;
    let mut t0 = None;
    let mut h = None;
    for part in rest.split_whitespace() {
        if let Some(v) = part.strip_prefix("t0=") {
            t0 = v.parse().ok();
        } else if let Some(v) = part.strip_prefix("h=") {
            h = v.parse().ok();
        }
    }
    Some((t0?, h?))
}

/// Reads the `t,value` format. Grid origin and step come from the `# grid`
/// comment when present, otherwise from the first and last `t`.
pub fn load_sampled_csv<R: Read>(source: R) -> Result<SampledFunction> {
    let mut grid = None;
    let mut ts = Vec::new();
    let mut values = Vec::new();
    let mut seen_header = false;
    for (k, line) in BufReader::new(source).lines().enumerate() {
        let line = line?;
        let lineno = k + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            if let Some(g) = grid_comment(trimmed) {
                grid = Some(g);
            }
            continue;
        }
        if !seen_header {
            seen_header = true;
            if trimmed.replace(' ', "") == "t,value" {
                continue;
            }
            return Err(Error::Parse {
                line: lineno,
                message: "expected header `t,value`".into(),
            });
        }
        let mut fields = trimmed.split(',').map(str::trim);
        let (Some(t), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: lineno,
                message: "expected two fields `t,value`".into(),
            });
        };
        let parse = |s: &str, what: &str| {
            s.parse::<f64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("bad {what} {s:?}"),
            })
        };
        ts.push(parse(t, "t")?);
        values.push(parse(v, "value")?);
    }
    if values.is_empty() {
        return Err(Error::Input("no samples in input".into()));
    }
    let (t0, h) = match grid {
        Some(g) => g,
        None if ts.len() >= 2 => (ts[0], (ts[ts.len() - 1] - ts[0]) / (ts.len() - 1) as f64),
        None => (ts[0], 1.0),
    };
    SampledFunction::new(t0, h, values).map_err(|e| match e {
        Error::NonFinite { t, value } => Error::Input(format!("non-finite sample {value} at t = {t}")),
        e => Error::Input(e.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn interpolation_and_mean() {
        let f = SampledFunction::new(0.0, 0.5, vec![0.0, 1.0, 4.0]).unwrap();
        assert_eq!(f.eval(0.25), 0.5);
        assert_eq!(f.eval(0.75), 2.5);
        assert_eq!(f.eval(-3.0), 0.0);
        assert_eq!(f.eval(9.0), 4.0);
        assert_eq!(f.mean(), (0.5 * 0.0 + 1.0 + 0.5 * 4.0) / 2.0);
    }

    #[test]
    fn rejects_non_finite_samples() {
        assert!(matches!(
            SampledFunction::new(0.0, 1.0, vec![0.0, f64::NAN]),
            Err(Error::NonFinite { .. })
        ));
        assert!(SampledFunction::new(0.0, 0.0, vec![1.0]).is_err());
        assert!(SampledFunction::new(0.0, 1.0, vec![]).is_err());
    }

    #[test]
    fn csv_without_grid_comment() {
        let f = load_sampled_csv("t,value\n0,1\n0.5,2\n1,3\n".as_bytes()).unwrap();
        assert_eq!(f.h(), 0.5);
        assert_eq!(f.values(), &[1.0, 2.0, 3.0]);
        assert!(load_sampled_csv("0,1\n".as_bytes()).is_err());
        assert!(load_sampled_csv("t,value\n0,x\n".as_bytes()).is_err());
    }

    proptest! {
        #[test]
        fn csv_round_trip_is_bit_exact(
            t0 in -1e3f64..1e3, h in 1e-4f64..10.0,
            values in prop::collection::vec(-1e12f64..1e12, 1..50),
        ) {
            let f = SampledFunction::new(t0, h, values).unwrap();
            let mut buf = Vec::new();
            write_sampled_csv(&f, &mut buf).unwrap();
            prop_assert_eq!(load_sampled_csv(buf.as_slice()).unwrap(), f);
        }
    }
}
