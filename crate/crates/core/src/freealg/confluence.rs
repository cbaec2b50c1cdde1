use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::poly::NCPoly;
use super::rewrite::{RewriteSystem, Strategy};
use super::word::Word;
use crate::error::Result;
use crate::scalars::Ring;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    pub trial: u64,
    pub word: String,
    pub leftmost: String,
    pub rightmost: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub seed: u64,
    pub trials: u64,
    pub max_degree: usize,
    pub words_checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Random word of length 1..=max_degree for trial `trial`; each trial owns
/// its own stream so results do not depend on scheduling.
pub fn trial_word(alphabet: &[super::Letter], max_degree: usize, seed: u64, trial: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let len = rng.random_range(1..=max_degree.max(1));
    Word(
        (0..len)
            .map(|_| alphabet[rng.random_range(0..alphabet.len())])
            .collect(),
    )
}

/// Normalizes seeded random words with leftmost-first and rightmost-first
/// contraction and reports every word whose two normal forms differ.
pub fn check_local_confluence<S: Ring>(
    sys: &RewriteSystem<S>,
    max_degree: usize,
    trials: u64,
    seed: u64,
) -> Result<ConfluenceReport> {
    let alphabet = sys.alphabet();
    if alphabet.is_empty() {
        return Ok(ConfluenceReport {
            seed,
            trials,
            max_degree,
            words_checked: 0,
            mismatches: Vec::new(),
        });
    }
    let results: Vec<Result<Option<Mismatch>>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let w = trial_word(&alphabet, max_degree, seed, t);
            let p = NCPoly::word(w.clone());
            let l = sys.nf_with(&p, Strategy::Leftmost)?;
            let r = sys.nf_with(&p, Strategy::Rightmost)?;
            Ok((l != r).then(|| Mismatch {
                trial: t,
                word: w.render(),
                leftmost: l.render(),
                rightmost: r.render(),
            }))
        })
        .collect();
    let mut mismatches = Vec::new();
    for r in results {
        if let Some(m) = r? {
            mismatches.push(m);
        }
    }
    Ok(ConfluenceReport {
        seed,
        trials,
        max_degree,
        words_checked: trials,
        mismatches,
    })
}
