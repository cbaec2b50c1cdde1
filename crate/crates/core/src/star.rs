//! Antilinear anti-involutions on the generators and their scalar-tier checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{Letter, NCPoly, Word};
use crate::heisenberg::{quantum_det, residual_relations, Heisenberg, OpMatrix};
use crate::scalars::QRing;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum StarForm {
    /// Omega+- -> Omega-+, g -> h (h only exists at the matrix tier).
    Compact,
    /// g -> g, Omega -> Sigma.
    Hyperboloid,
}

impl StarForm {
    pub fn as_str(self) -> &'static str {
        match self {
            StarForm::Compact => "compact",
            StarForm::Hyperboloid => "hyperboloid",
        }
    }
}

impl fmt::Display for StarForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StarForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(StarForm::Compact),
            "hyperboloid" => Ok(StarForm::Hyperboloid),
            other => Err(Error::Config(format!(
                "unknown star form `{other}` (expected compact or hyperboloid)"
            ))),
        }
    }
}

/// Images of generators under an antilinear anti-automorphism. Composite
/// letters without an image are expanded and starred through their definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMap<S> {
    pub form: StarForm,
    images: BTreeMap<Letter, NCPoly<S>>,
}

impl<S: QRing> StarMap<S> {
    pub fn new(form: StarForm) -> Self {
        let mut images = BTreeMap::new();
        match form {
            StarForm::Compact => {
                for (a, b) in [
                    (Letter::K, Letter::Kinv),
                    (Letter::Kinv, Letter::K),
                    (Letter::Xp, Letter::Xm),
                    (Letter::Xm, Letter::Xp),
                ] {
                    images.insert(a, NCPoly::letter(b));
                }
            }
            StarForm::Hyperboloid => {
                for i in 0..2u8 {
                    for j in 0..2u8 {
                        images.insert(Letter::G(i, j), NCPoly::letter(Letter::G(j, i)));
                        images.insert(Letter::Omega(i, j), NCPoly::letter(Letter::Sigma(j, i)));
                        images.insert(Letter::Sigma(i, j), NCPoly::letter(Letter::Omega(j, i)));
                    }
                }
            }
        }
        StarMap { form, images }
    }

    pub fn compact() -> Self {
        Self::new(StarForm::Compact)
    }

    pub fn hyperboloid() -> Self {
        Self::new(StarForm::Hyperboloid)
    }

    /// Replaces one image; used to build corrupted maps for negative controls.
    pub fn with_image(mut self, l: Letter, img: NCPoly<S>) -> Self {
        self.images.insert(l, img);
        self
    }

    pub fn image(&self, l: Letter) -> Option<&NCPoly<S>> {
        self.images.get(&l)
    }

    /// Letters with an explicit image, in precedence order.
    pub fn domain(&self) -> Vec<Letter> {
        self.images.keys().copied().collect()
    }

    fn missing(&self, l: Letter) -> Error {
        let hint = match (self.form, l) {
            (StarForm::Compact, Letter::G(..)) | (StarForm::Compact, Letter::Sigma(..)) => {
                "; the compact form sends g to h, which exists only at the matrix tier (use `check star --tier matrix`)".to_string()
            }
            (StarForm::Hyperboloid, Letter::K | Letter::Kinv | Letter::Xp | Letter::Xm | Letter::OmPlus(..) | Letter::OmMinus(..)) => {
                "; the hyperboloid form acts on g, Omega and Sigma entries (use `check star --tier matrix` for Omega+-)".to_string()
            }
            _ => String::new(),
        };
        Error::NoImage {
            letter: l.render(),
            hint,
        }
    }
}

/// Applies the star: conjugates coefficients, reverses words, maps letters.
/// The result is not normalized.
pub fn star_apply<S: QRing>(p: &NCPoly<S>, map: &StarMap<S>, alg: &Heisenberg<S>) -> Result<NCPoly<S>> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::constant(c.conj());
        for &l in w.letters().iter().rev() {
            let img = match map.image(l) {
                Some(img) => img.clone(),
                None if l.is_composite() => {
                    let def = alg.expand_composites(&NCPoly::letter(l));
                    star_apply(&def, map, alg)?
                }
                None => return Err(map.missing(l)),
            };
            acc = &acc * &img;
        }
        out = out + acc;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureStatus {
    Pass,
    Fail,
    Deferred,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureEntry {
    pub relation: String,
    pub status: ClosureStatus,
    /// Normal form of the starred relation when it fails, or the reason it
    /// was deferred.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarClosureReport {
    pub form: StarForm,
    pub entries: Vec<ClosureEntry>,
}

impl StarClosureReport {
    pub fn count(&self, s: ClosureStatus) -> usize {
        self.entries.iter().filter(|e| e.status == s).count()
    }

    pub fn passed(&self) -> bool {
        self.count(ClosureStatus::Fail) == 0 && self.count(ClosureStatus::Pass) > 0
    }
}

/// Relations over generator and composite letters that the star must
/// preserve: the extracted relations plus the composite exchange relations.
pub fn closure_catalog<S: QRing>(alg: &Heisenberg<S>) -> Result<Vec<(String, NCPoly<S>)>> {
    let mut out: Vec<(String, NCPoly<S>)> = alg
        .relations()
        .iter()
        .map(|r| (r.id.clone(), r.poly.clone()))
        .collect();
    let rp = OpMatrix::from_cmatrix(&alg.rplus);
    let rm = OpMatrix::from_cmatrix(&alg.rminus);
    let rpi = OpMatrix::from_cmatrix(&alg.rplus.inverse()?);
    let rmi = OpMatrix::from_cmatrix(&alg.rminus.inverse()?);
    let om = alg.omega_letters();
    let (o1, o2) = (om.embed1(), om.embed2());
    let refl = &(&(&(&o1 * &rmi) * &o2) * &rm) - &(&(&(&rpi * &o2) * &rp) * &o1);
    for (k, p) in residual_relations(&refl).into_iter().enumerate() {
        out.push((format!("omega-reflection#{k}"), p));
    }
    let g1 = alg.g.embed1();
    let mixed = &(&(&rm * &g1) * &o2) - &(&(&o2 * &rp) * &g1);
    for (k, p) in residual_relations(&mixed).into_iter().enumerate() {
        out.push((format!("g-omega#{k}"), p));
    }
    for i in 0..2u8 {
        for j in 0..2u8 {
            for k in 0..2u8 {
                for l in 0..2u8 {
                    let o = NCPoly::letter(Letter::Omega(i, j));
                    let s = NCPoly::letter(Letter::Sigma(k, l));
                    out.push((
                        format!("omega-sigma[{}{},{}{}]", i + 1, j + 1, k + 1, l + 1),
                        o.commutator(&s),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Stars every catalog relation and normalizes it. Relations touching a
/// letter without an image are deferred to the matrix tier.
pub fn verify_star_closure<S: QRing>(map: &StarMap<S>, alg: &Heisenberg<S>) -> Result<StarClosureReport> {
    let mut entries = Vec::new();
    for (id, rel) in closure_catalog(alg)? {
        let entry = match star_apply(&rel, map, alg) {
            Ok(img) => {
                let nf = alg.nf(&img)?;
                if nf.is_zero() {
                    ClosureEntry {
                        relation: id,
                        status: ClosureStatus::Pass,
                        detail: None,
                    }
                } else {
                    ClosureEntry {
                        relation: id,
                        status: ClosureStatus::Fail,
                        detail: Some(nf.render()),
                    }
                }
            }
            Err(e @ Error::NoImage { .. }) => ClosureEntry {
                relation: id,
                status: ClosureStatus::Deferred,
                detail: Some(e.to_string()),
            },
            Err(e) => return Err(e),
        };
        entries.push(entry);
    }
    Ok(StarClosureReport {
        form: map.form,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub trials: u64,
    pub seed: u64,
    pub failures: Vec<String>,
}

fn random_scalar<S: QRing>(rng: &mut ChaCha8Rng) -> S {
    let i = S::imaginary_unit().unwrap_or_else(S::one);
    match rng.random_range(0..6) {
        0 => S::one(),
        1 => S::from_int(rng.random_range(-3..=3)),
        2 => i,
        3 => S::q_pow(rng.random_range(-3..=3), 2),
        4 => S::lambda().inv_unit().expect("lambda is a unit"),
        _ => S::one() + i * S::q(),
    }
}

/// Random polynomial over `alphabet` for trial `trial`.
pub fn random_poly<S: QRing>(alphabet: &[Letter], max_degree: usize, seed: u64, trial: u64) -> NCPoly<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut p = NCPoly::zero();
    for _ in 0..rng.random_range(1..=3) {
        let len = rng.random_range(0..=max_degree);
        let w: Vec<Letter> = (0..len)
            .map(|_| alphabet[rng.random_range(0..alphabet.len())])
            .collect();
        p.add_term(Word(w), random_scalar(&mut rng));
    }
    p
}

/// star(star(p)) = p on random polynomials over the map's domain, both
/// syntactically and after normalization.
pub fn check_involutivity<S: QRing>(
    map: &StarMap<S>,
    alg: &Heisenberg<S>,
    trials: u64,
    seed: u64,
) -> Result<InvolutionReport> {
    let domain = map.domain();
    let mut failures = Vec::new();
    for t in 0..trials {
        let p = random_poly::<S>(&domain, 4, seed, t);
        let back = star_apply(&star_apply(&p, map, alg)?, map, alg)?;
        if back != p && alg.nf(&(&back - &p))? != NCPoly::zero() {
            failures.push(p.render());
        }
    }
    Ok(InvolutionReport {
        trials,
        seed,
        failures,
    })
}

/// star(det_q g) - det_q g in normal form, without the unit-determinant rule.
pub fn star_det_residual<S: QRing>(map: &StarMap<S>, alg: &Heisenberg<S>) -> Result<NCPoly<S>> {
    let det = quantum_det(&alg.g)?;
    let img = star_apply(&det, map, alg)?;
    alg.presentation().nf(&(&img - &det))
}

/// True when every image is a single letter with coefficient one.
pub fn is_letter_map<S: QRing>(map: &StarMap<S>) -> bool {
    map.domain().into_iter().all(|l| {
        map.image(l)
            .and_then(|p| p.leading().map(|(w, c)| p.len() == 1 && w.len() == 1 && c.is_one()))
            .unwrap_or(false)
    })
}
