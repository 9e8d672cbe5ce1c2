use std::io::{Read, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::params::ModelParams;

/// A finite sample `xᵢ = yᵢ·μ·e₁ + σ·gᵢ`, `gᵢ ~ N(0, I_p)`.
///
/// Rows are stored contiguously (`features[i*p .. (i+1)*p]`). Class-1 rows
/// (label `+1`) come first.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub n: usize,
    pub p: usize,
    pub features: Vec<f64>,
    pub labels: Vec<i8>,
    pub params: ModelParams,
    pub seed: u64,
}

impl Dataset {
    pub fn row(&self, i: usize) -> &[f64] {
        &self.features[i * self.p..(i + 1) * self.p]
    }

    pub fn label(&self, i: usize) -> f64 {
        f64::from(self.labels[i])
    }

    /// The unit vector along the class mean, `e₁`.
    pub fn mu_direction(&self) -> Vec<f64> {
        let mut e = vec![0.0; self.p];
        e[0] = 1.0;
        e
    }

    pub fn class_counts(&self) -> (usize, usize) {
        let n1 = self.labels.iter().filter(|&&y| y == 1).count();
        (self.n - n1, n1)
    }

    /// Builds a dataset from explicit rows, for hand-made instances.
    pub fn from_rows(rows: &[Vec<f64>], labels: &[i8], params: ModelParams) -> Result<Self> {
        if rows.is_empty() || rows.len() != labels.len() {
            return Err(Error::InvalidArgument(format!(
                "need matching nonempty rows and labels, got {} and {}",
                rows.len(),
                labels.len()
            )));
        }
        let p = rows[0].len();
        if p == 0 || rows.iter().any(|r| r.len() != p) {
            return Err(Error::InvalidArgument("rows must share a positive length".into()));
        }
        if labels.iter().any(|&y| y != 1 && y != -1) {
            return Err(Error::InvalidArgument("labels must be +1 or -1".into()));
        }
        Ok(Dataset {
            n: rows.len(),
            p,
            features: rows.concat(),
            labels: labels.to_vec(),
            params,
            seed: 0,
        })
    }

    /// Multiplies every feature by `c`.
    pub fn scaled(&self, c: f64) -> Dataset {
        let mut d = self.clone();
        d.features.iter_mut().for_each(|v| *v *= c);
        d.params.mu *= c;
        d.params.sigma *= c;
        d
    }

    /// Flat little-endian layout: `n`, `p`, `seed` as `u64`, then the row-major
    /// `f64` features, then the labels as `i8`.
    pub fn write_binary<W: Write>(&self, mut w: W) -> Result<()> {
        for v in [self.n as u64, self.p as u64, self.seed] {
            w.write_all(&v.to_le_bytes())?;
        }
        for v in &self.features {
            w.write_all(&v.to_le_bytes())?;
        }
        let labels: Vec<u8> = self.labels.iter().map(|&y| y as u8).collect();
        w.write_all(&labels)?;
        Ok(())
    }

    /// Reads the layout written by [`Dataset::write_binary`]. The binary form
    /// does not carry model parameters, so they are supplied by the caller.
    pub fn read_binary<R: Read>(mut r: R, params: ModelParams) -> Result<Dataset> {
        let mut word = [0u8; 8];
        let mut header = [0u64; 3];
        for h in header.iter_mut() {
            r.read_exact(&mut word)?;
            *h = u64::from_le_bytes(word);
        }
        let [n, p, seed] = header;
        let (n, p) = (n as usize, p as usize);
        let len = n
            .checked_mul(p)
            .ok_or_else(|| Error::Io("dataset header overflows".into()))?;
        let mut features = Vec::with_capacity(len);
        for _ in 0..len {
            r.read_exact(&mut word)?;
            features.push(f64::from_le_bytes(word));
        }
        let mut raw = vec![0u8; n];
        r.read_exact(&mut raw)?;
        let labels = raw.into_iter().map(|b| b as i8).collect();
        Ok(Dataset {
            n,
            p,
            features,
            labels,
            params,
            seed,
        })
    }
}

/// Class sizes `(n₀, n₁)` with `n = round(δp)` and `n₁ = round(π₁n)`.
pub fn class_sizes(params: &ModelParams, p: usize) -> Result<(usize, usize)> {
    let n = (params.delta * p as f64).round() as usize;
    let n1 = (params.pi1 * n as f64).round() as usize;
    let n0 = n - n1.min(n);
    if n0 == 0 || n1 == 0 {
        return Err(Error::DegenerateSplit { n0, n1 });
    }
    Ok((n0, n1))
}

/// Draws a dataset; identical seeds give bit-identical data on every platform.
pub fn generate_dataset(params: &ModelParams, p: usize, seed: u64) -> Result<Dataset> {
    params.validate()?;
    if p < 2 {
        return Err(Error::InvalidArgument(format!("p must be at least 2, got {p}")));
    }
    let (n0, n1) = class_sizes(params, p)?;
    let n = n0 + n1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut features = Vec::with_capacity(n * p);
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let y: i8 = if i < n1 { 1 } else { -1 };
        for j in 0..p {
            let g: f64 = StandardNormal.sample(&mut rng);
            let mean = if j == 0 { f64::from(y) * params.mu } else { 0.0 };
            features.push(mean + params.sigma * g);
        }
        labels.push(y);
    }
    Ok(Dataset {
        n,
        p,
        features,
        labels,
        params: *params,
        seed,
    })
}
