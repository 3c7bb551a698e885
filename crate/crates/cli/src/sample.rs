//! Seeded generation of random tropical objects.
//!
//! Every trial owns a ChaCha8 stream: the generator is seeded with the run
//! seed via `seed_from_u64` and `set_stream` selects the trial index, so a
//! trial's instance depends only on `(seed, trial)` and never on scheduling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trop_core::{Domain, Orientation, TropMatrix, TropScalar, TropVector};

/// How entries are drawn.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryPool {
    /// Numerators are drawn uniformly from `-max_num..=max_num`.
    pub max_num: i64,
    pub denominators: Vec<i64>,
    /// Probability of `-inf` outside the finitary semiring.
    pub p_neg_inf: f64,
    /// Probability of `inf` in the completed semiring.
    pub p_pos_inf: f64,
}

impl Default for EntryPool {
    fn default() -> Self {
        EntryPool {
            max_num: 8,
            denominators: vec![1, 2, 3],
            p_neg_inf: 0.2,
            p_pos_inf: 0.1,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    pool: EntryPool,
    dims: (usize, usize),
    trial: u64,
}

impl Sampler {
    pub fn for_trial(seed: u64, trial: u64, pool: &EntryPool, dims: (usize, usize)) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Sampler {
            rng,
            pool: pool.clone(),
            dims,
            trial,
        }
    }

    pub fn trial(&self) -> u64 {
        self.trial
    }

    /// A dimension from the configured range.
    pub fn dim(&mut self) -> usize {
        let (lo, hi) = self.dims;
        self.range(lo, hi)
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("nonempty choice")
    }

    pub fn finite(&mut self) -> TropScalar {
        let n = self.pool.max_num;
        let num = self.rng.gen_range(-n..=n);
        let den = *self
            .pool
            .denominators
            .choose(&mut self.rng)
            .expect("denominators");
        TropScalar::ratio(num, den)
    }

    /// An integer in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> TropScalar {
        TropScalar::int(self.rng.gen_range(lo..=hi))
    }

    pub fn scalar(&mut self, domain: Domain) -> TropScalar {
        let u: f64 = self.rng.gen();
        let (neg, pos) = match domain {
            Domain::Finitary => (0.0, 0.0),
            Domain::Tropical => (self.pool.p_neg_inf, 0.0),
            Domain::Completed => (self.pool.p_neg_inf, self.pool.p_pos_inf),
        };
        if u < pos {
            TropScalar::PosInf
        } else if u < pos + neg {
            TropScalar::NegInf
        } else {
            self.finite()
        }
    }

    pub fn scalars(&mut self, n: usize, domain: Domain) -> Vec<TropScalar> {
        (0..n).map(|_| self.scalar(domain)).collect()
    }

    pub fn row(&mut self, n: usize, domain: Domain) -> TropVector {
        TropVector::row(self.scalars(n, domain))
    }

    pub fn column(&mut self, n: usize, domain: Domain) -> TropVector {
        TropVector::column(self.scalars(n, domain))
    }

    pub fn matrix(&mut self, rows: usize, cols: usize, domain: Domain) -> TropMatrix {
        TropMatrix::new(rows, cols, self.scalars(rows * cols, domain)).expect("shape")
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut self.rng);
        p
    }

    /// A permutation matrix with finite weights on its pattern.
    pub fn monomial(&mut self, n: usize) -> TropMatrix {
        let p = self.permutation(n);
        let mut m = TropMatrix::zero(n, n);
        for (i, &j) in p.iter().enumerate() {
            let w = self.finite();
            m.set(i, j, w);
        }
        m
    }

    /// A random `domain`-combination of `gens`.
    pub fn combination(&mut self, gens: &[TropVector], domain: Domain) -> TropVector {
        let mut acc = TropVector::zero(gens[0].dim(), gens[0].orientation());
        for g in gens {
            let c = self.scalar(domain);
            acc = acc.oplus(&g.scale(&c)).expect("same shape");
        }
        acc
    }

    pub fn vector(&mut self, n: usize, domain: Domain, orientation: Orientation) -> TropVector {
        TropVector::new(self.scalars(n, domain), orientation)
    }
}
