use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

impl Spacing {
    pub fn as_str(&self) -> &'static str {
        match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        }
    }
}

impl std::str::FromStr for Spacing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lin" | "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(Error::Usage(format!("unknown spacing {other:?}"))),
        }
    }
}

/// Closed grid `[lo, hi]` with `points` nodes, both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, points: usize, spacing: Spacing) -> Result<Self> {
        let g = GridSpec {
            lo,
            hi,
            points,
            spacing,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn log(lo: f64, hi: f64, points: usize) -> Self {
        GridSpec::new(lo, hi, points, Spacing::Log).expect("valid log grid")
    }

    pub fn linear(lo: f64, hi: f64, points: usize) -> Self {
        GridSpec::new(lo, hi, points, Spacing::Linear).expect("valid linear grid")
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::Usage(format!(
                "grid needs lo < hi, got {}:{}",
                self.lo, self.hi
            )));
        }
        if self.points < 2 {
            return Err(Error::Usage("grid needs at least 2 points".into()));
        }
        if self.spacing == Spacing::Log && self.lo <= 0.0 {
            return Err(Error::Usage("log spacing needs lo > 0".into()));
        }
        Ok(())
    }

    /// Parses `lo:hi:points:log|lin`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Usage(format!(
                "grid must look like lo:hi:points:log|lin, got {s:?}"
            )));
        }
        let num = |p: &str| -> Result<f64> {
            p.parse::<f64>()
                .map_err(|_| Error::Usage(format!("bad grid number {p:?}")))
        };
        let points = parts[2]
            .parse::<usize>()
            .map_err(|_| Error::Usage(format!("bad grid point count {:?}", parts[2])))?;
        GridSpec::new(num(parts[0])?, num(parts[1])?, points, parts[3].parse()?)
    }

    pub fn nodes(&self) -> Vec<f64> {
        let n = self.points;
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.lo;
                }
                if i == n - 1 {
                    return self.hi;
                }
                let s = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.lo + (self.hi - self.lo) * s,
                    Spacing::Log => (self.lo.ln() + (self.hi.ln() - self.lo.ln()) * s).exp(),
                }
            })
            .map(|v| if v == 0.0 { self.lo } else { v })
            .collect()
    }
}
