//! Seeded random graphs with boundary.
//!
//! The interior is an Erdős–Rényi graph, every boundary vertex is attached to
//! a random nonempty set of interior vertices, and disconnected draws are
//! rejected. Vertex labels are shuffled so that boundary and interior
//! vertices interleave.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, LogNormal};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedBoundaryGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightModel {
    /// `m ≡ 1`, `w ≡ 1`.
    Unit,
    /// Lognormal weights with `m_x = Σ_y w_xy`, so `Deg ≡ 1`.
    Normalized,
    /// Lognormal weights and measures.
    Lognormal,
}

impl WeightModel {
    pub const ALL: [WeightModel; 3] = [WeightModel::Unit, WeightModel::Normalized, WeightModel::Lognormal];
}

impl fmt::Display for WeightModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightModel::Unit => "unit",
            WeightModel::Normalized => "normalized",
            WeightModel::Lognormal => "lognormal",
        })
    }
}

impl FromStr for WeightModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WeightModel::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown weight model {s:?}")))
    }
}

/// Per-instance seed, so instance `index` does not depend on how many
/// instances were drawn before it.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A valid graph with between 2 and `max_vertices` vertices.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, model: WeightModel) -> Result<WeightedBoundaryGraph> {
    if max_vertices < 2 {
        return Err(Error::InvalidArgument("max_vertices must be at least 2".into()));
    }
    loop {
        if let Some(g) = draw(rng, max_vertices, model)? {
            return Ok(g);
        }
    }
}

/// Instance `index` of the audit stream for `seed`; weight models cycle.
pub fn audit_instance(seed: u64, index: u64, max_vertices: usize) -> Result<(WeightModel, WeightedBoundaryGraph)> {
    let model = WeightModel::ALL[(index % 3) as usize];
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(seed, index));
    Ok((model, random_graph(&mut rng, max_vertices, model)?))
}

fn draw<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, model: WeightModel) -> Result<Option<WeightedBoundaryGraph>> {
    let n = rng.random_range(2..=max_vertices);
    let interior_count = rng.random_range(1..n);
    let p = rng.random_range(0.3..0.9);
    let attach = rng.random_range(0.2..0.7);

    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let (interior, boundary) = labels.split_at(interior_count);

    let mut adjacent = DMatrix::from_element(n, n, false);
    for (k, &a) in interior.iter().enumerate() {
        for &b in &interior[k + 1..] {
            if rng.random_bool(p) {
                adjacent[(a, b)] = true;
                adjacent[(b, a)] = true;
            }
        }
    }
    for &x in boundary {
        let forced = interior[rng.random_range(0..interior.len())];
        for &y in interior {
            if y == forced || rng.random_bool(attach) {
                adjacent[(x, y)] = true;
                adjacent[(y, x)] = true;
            }
        }
    }

    let lognormal = LogNormal::new(0.0, 1.0).expect("valid parameters");
    let mut weights = DMatrix::zeros(n, n);
    for a in 0..n {
        for b in a + 1..n {
            if adjacent[(a, b)] {
                let w = match model {
                    WeightModel::Unit => 1.0,
                    _ => lognormal.sample(rng),
                };
                weights[(a, b)] = w;
                weights[(b, a)] = w;
            }
        }
    }
    let measure: Vec<f64> = match model {
        WeightModel::Unit => vec![1.0; n],
        WeightModel::Normalized => weights.row_iter().map(|r| r.sum()).collect(),
        WeightModel::Lognormal => {
            let m = LogNormal::new(0.0, 0.5).expect("valid parameters");
            (0..n).map(|_| m.sample(rng)).collect()
        }
    };
    if measure.iter().any(|&m| m <= 0.0) {
        return Ok(None);
    }
    let g = WeightedBoundaryGraph::from_parts(measure, weights, boundary)?;
    Ok(g.validate().is_ok().then_some(g))
}
