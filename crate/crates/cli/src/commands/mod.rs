use rayon::prelude::*;
use taylorstab_core::exactnum::{BigRat, Dyadic, Round};
use taylorstab_core::extremal::BbConfig;

use crate::format::parse_decimal;
use crate::{Cache, Failure, Global};

pub mod contours;
pub mod radial;
pub mod slices;
pub mod tables;
pub mod trace;
pub mod verify;
pub mod zeros;

/// Validated global settings shared by every command.
pub struct Ctx {
    pub global: Global,
    pub tol: Dyadic,
    pub cache: Option<Cache>,
    pool: rayon::ThreadPool,
}

impl Ctx {
    pub fn new(g: &Global) -> Result<Ctx, Failure> {
        if g.precision_bits < 64 {
            return Err(Failure::Usage(format!("--precision-bits must be at least 64, got {}", g.precision_bits)));
        }
        let q: BigRat = parse_decimal(&g.tol)?;
        if q <= BigRat::from_integer(0.into()) {
            return Err(Failure::Usage("--tol must be positive".into()));
        }
        let tol = Dyadic::from_rational(&q, 64, Round::Floor);
        if tol.is_zero() {
            return Err(Failure::Usage("--tol is too small".into()));
        }
        if g.jobs == Some(0) {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        if g.budget == Some(0) {
            return Err(Failure::Usage("--budget must be at least 1".into()));
        }
        let cache = match &g.cache_dir {
            Some(d) => Some(Cache::open(d)?),
            None => None,
        };
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = g.jobs {
            b = b.num_threads(j);
        }
        let pool = b.build().map_err(|e| Failure::Io(e.to_string()))?;
        Ok(Ctx { global: g.clone(), tol, cache, pool })
    }

    pub fn bb_config(&self) -> BbConfig {
        let mut cfg = BbConfig::with_tol(self.tol.clone());
        if let Some(b) = self.global.budget {
            cfg.max_boxes = b;
        }
        cfg
    }

    /// Ordered parallel map on the command's worker pool.
    pub fn par_map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}

/// Collects per-item results, failing on the first error in input order.
pub fn all_ok<R>(v: Vec<Result<R, Failure>>) -> Result<Vec<R>, Failure> {
    v.into_iter().collect()
}
