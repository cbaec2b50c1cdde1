use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::rulebase::{BaseRule, RuleBase, RuleOrigin};
use super::symbol::{
    expand, free_reduce, inverse_word, render_word, swap_word, MatEquation, MatSymbol, MatWord, Space,
};
use crate::error::{Error, Result};
use crate::scalars::Ring;

/// Search limits. `max_depth` counts rewrite steps on both sides together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProverConfig {
    pub max_depth: usize,
    pub max_nodes: usize,
    /// Largest allowed |y| - |x| of a substitution x -> y.
    pub growth: usize,
    /// Words may grow this far beyond the longer side of the goal.
    pub slack: usize,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            max_depth: 12,
            max_nodes: 400_000,
            growth: 2,
            slack: 4,
        }
    }
}

/// How a relator was transformed before cutting it into a substitution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Variant {
    /// Space label given to the symbols of a single-space relation.
    pub space: Space,
    /// Conjugated by P (spaces exchanged, R+- -> R-+^-1).
    pub swapped: bool,
    pub inverted: bool,
    pub rotation: usize,
    /// Length of the replaced part.
    pub split: usize,
}

#[derive(Clone, Debug)]
struct Piece<S> {
    rule: usize,
    variant: Variant,
    from: Vec<MatSymbol>,
    to: Vec<MatSymbol>,
    factor: S,
}

/// Substitution `x -> factor * y^-1` read off the relator `x y = value`.
fn make_piece<S: Ring>(rule: usize, relator: &(Vec<MatSymbol>, S), v: Variant) -> Result<Piece<S>> {
    let mut w: Vec<MatSymbol> = relator
        .0
        .iter()
        .map(|s| if s.space == Space::Both && !s.name.is_two_space() { s.with_space(v.space) } else { *s })
        .collect();
    let mut value = relator.1.clone();
    if v.swapped {
        w = swap_word(&w);
    }
    if v.inverted {
        w = inverse_word(&w);
        value = value.inv_unit()?;
    }
    let n = w.len();
    let rot: Vec<MatSymbol> = (0..n).map(|k| w[(k + v.rotation) % n]).collect();
    let (x, y) = rot.split_at(v.split);
    Ok(Piece {
        rule,
        variant: v,
        from: x.to_vec(),
        to: inverse_word(y),
        factor: value,
    })
}

fn is_single_space(w: &[MatSymbol]) -> bool {
    w.iter().all(|s| s.space == Space::Both)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofStep {
    pub rule: String,
    pub source: String,
    #[serde(skip)]
    pub rule_index: usize,
    pub position: usize,
    /// `forward` when the relator is used as written, `backward` when inverted.
    pub direction: &'static str,
    pub variant: Variant,
    pub result: String,
}

/// Joinability certificate: both sides rewrite to the same word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    pub lhs: String,
    pub rhs: String,
    #[serde(skip)]
    pub lhs_word: Vec<MatSymbol>,
    #[serde(skip)]
    pub rhs_word: Vec<MatSymbol>,
    pub lhs_steps: Vec<ProofStep>,
    pub rhs_steps: Vec<ProofStep>,
    pub meet: String,
}

impl ProofTrace {
    pub fn len(&self) -> usize {
        self.lhs_steps.len() + self.rhs_steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rules used, in order of use.
    pub fn rules_used(&self) -> Vec<&str> {
        self.lhs_steps
            .iter()
            .chain(&self.rhs_steps)
            .map(|s| s.rule.as_str())
            .collect()
    }
}

#[derive(Clone, Debug)]
struct Node<S> {
    word: Vec<MatSymbol>,
    coeff: S,
    parent: Option<(usize, usize, usize)>,
}

/// Word-problem prover over the matrix rule base: bidirectional
/// breadth-first search with substitutions cut from relators.
#[derive(Clone, Debug)]
pub struct Prover<S> {
    base: RuleBase<S>,
    config: ProverConfig,
    pieces: Vec<Piece<S>>,
    index: HashMap<MatSymbol, Vec<usize>>,
    seen: HashSet<(Vec<MatSymbol>, Vec<MatSymbol>)>,
}

impl<S: Ring> Prover<S> {
    pub fn new(base: RuleBase<S>, config: ProverConfig) -> Result<Self> {
        let mut p = Prover {
            base: RuleBase::from_rules(Vec::new()),
            config,
            pieces: Vec::new(),
            index: HashMap::new(),
            seen: HashSet::new(),
        };
        for r in base.rules() {
            p.add_rule(r.clone())?;
        }
        Ok(p)
    }

    pub fn base(&self) -> &RuleBase<S> {
        &self.base
    }

    pub fn config(&self) -> ProverConfig {
        self.config
    }

    fn relator(rule: &BaseRule<S>) -> Result<(Vec<MatSymbol>, S)> {
        let (w, v) = rule.eq.relator()?;
        Ok((expand(&w), v))
    }

    fn variants(relator: &[MatSymbol], growth: usize) -> Vec<Variant> {
        let n = relator.len();
        let spaces: &[Space] = if is_single_space(relator) {
            &[Space::Both, Space::One, Space::Two]
        } else {
            &[Space::Both]
        };
        let mut out = Vec::new();
        for &space in spaces {
            for swapped in [false, true] {
                if swapped && space == Space::Both && is_single_space(relator) {
                    continue;
                }
                for inverted in [false, true] {
                    for rotation in 0..n {
                        for split in 1..=n {
                            if (n - split) <= split + growth {
                                out.push(Variant {
                                    space,
                                    swapped,
                                    inverted,
                                    rotation,
                                    split,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Adds a rule and its substitutions. Duplicate substitutions keep the
    /// first rule that produced them.
    pub fn add_rule(&mut self, rule: BaseRule<S>) -> Result<()> {
        let idx = self.base.len();
        let rel = Self::relator(&rule)?;
        for v in Self::variants(&rel.0, self.config.growth) {
            let piece = make_piece(idx, &rel, v)?;
            if piece.from.is_empty() || piece.from == piece.to {
                continue;
            }
            let key = (piece.from.clone(), piece.to.clone());
            if !self.seen.insert(key) {
                continue;
            }
            self.index.entry(piece.from[0]).or_default().push(self.pieces.len());
            self.pieces.push(piece);
        }
        self.base.push(rule);
        Ok(())
    }

    pub fn add_lemma(&mut self, id: &str, source: &str, eq: MatEquation<S>) -> Result<()> {
        self.add_rule(BaseRule {
            id: format!("lemma:{id}"),
            source: source.into(),
            eq,
            origin: RuleOrigin::Lemma(id.into()),
        })
    }

    fn successors(&self, word: &[MatSymbol], cap: usize) -> Vec<(Vec<MatSymbol>, usize, usize)> {
        let mut out = Vec::new();
        for p in 0..word.len() {
            let Some(cands) = self.index.get(&word[p]) else { continue };
            for &pi in cands {
                let piece = &self.pieces[pi];
                let l = piece.from.len();
                if p + l > word.len() || word[p..p + l] != piece.from[..] {
                    continue;
                }
                if word.len() - l + piece.to.len() > cap + 2 {
                    continue;
                }
                let mut next = Vec::with_capacity(word.len() - l + piece.to.len());
                next.extend_from_slice(&word[..p]);
                next.extend_from_slice(&piece.to);
                next.extend_from_slice(&word[p + l..]);
                let next = free_reduce(&next);
                if next.len() <= cap {
                    out.push((next, pi, p));
                }
            }
        }
        out
    }

    /// Searches for a common rewrite of both sides within the configured depth.
    pub fn prove(&self, eq: &MatEquation<S>) -> Result<ProofTrace> {
        let roots = [expand(&eq.lhs.syms), expand(&eq.rhs.syms)];
        let coeffs = [eq.lhs.coeff.clone(), eq.rhs.coeff.clone()];
        let cap = roots[0].len().max(roots[1].len()) + self.config.slack;
        let mut nodes: [Vec<Node<S>>; 2] = [Vec::new(), Vec::new()];
        let mut seen: [HashMap<Vec<MatSymbol>, usize>; 2] = [HashMap::new(), HashMap::new()];
        let mut frontier: [Vec<usize>; 2] = [vec![0], vec![0]];
        for side in 0..2 {
            nodes[side].push(Node {
                word: roots[side].clone(),
                coeff: coeffs[side].clone(),
                parent: None,
            });
            seen[side].insert(roots[side].clone(), 0);
        }
        if roots[0] == roots[1] && coeffs[0] == coeffs[1] {
            return Ok(self.trace(&nodes, 0, 0));
        }
        let mut depth = [0usize; 2];
        while depth[0] + depth[1] < self.config.max_depth {
            let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
            if frontier[side].is_empty() {
                return Err(Error::NotProved {
                    depth: self.config.max_depth,
                    reason: "search space exhausted".into(),
                });
            }
            let expansions: Vec<Vec<(Vec<MatSymbol>, usize, usize)>> = frontier[side]
                .par_iter()
                .map(|&n| self.successors(&nodes[side][n].word, cap))
                .collect();
            let mut next = Vec::new();
            for (&parent, succ) in frontier[side].iter().zip(expansions) {
                for (word, pi, pos) in succ {
                    if seen[side].contains_key(&word) {
                        continue;
                    }
                    let coeff = nodes[side][parent].coeff.clone() * self.pieces[pi].factor.clone();
                    let id = nodes[side].len();
                    seen[side].insert(word.clone(), id);
                    let hit = seen[1 - side]
                        .get(&word)
                        .copied()
                        .filter(|&o| nodes[1 - side][o].coeff == coeff);
                    nodes[side].push(Node {
                        word,
                        coeff,
                        parent: Some((parent, pi, pos)),
                    });
                    next.push(id);
                    if let Some(other) = hit {
                        let (l, r) = if side == 0 { (id, other) } else { (other, id) };
                        return Ok(self.trace(&nodes, l, r));
                    }
                }
            }
            depth[side] += 1;
            frontier[side] = next;
            if nodes[0].len() + nodes[1].len() > self.config.max_nodes {
                return Err(Error::NotProved {
                    depth: self.config.max_depth,
                    reason: format!("node budget {} exhausted", self.config.max_nodes),
                });
            }
        }
        Err(Error::NotProved {
            depth: self.config.max_depth,
            reason: "no common rewrite within depth".into(),
        })
    }

    fn steps(&self, nodes: &[Node<S>], mut at: usize) -> Vec<ProofStep> {
        let mut out = Vec::new();
        while let Some((parent, pi, pos)) = nodes[at].parent {
            let piece = &self.pieces[pi];
            let rule = &self.base.rules()[piece.rule];
            out.push(ProofStep {
                rule: rule.id.clone(),
                source: rule.source.clone(),
                rule_index: piece.rule,
                position: pos,
                direction: if piece.variant.inverted { "backward" } else { "forward" },
                variant: piece.variant,
                result: render_word(&nodes[at].word),
            });
            at = parent;
        }
        out.reverse();
        out
    }

    fn trace(&self, nodes: &[Vec<Node<S>>; 2], l: usize, r: usize) -> ProofTrace {
        ProofTrace {
            lhs: render_word(&nodes[0][0].word),
            rhs: render_word(&nodes[1][0].word),
            lhs_word: nodes[0][0].word.clone(),
            rhs_word: nodes[1][0].word.clone(),
            lhs_steps: self.steps(&nodes[0], l),
            rhs_steps: self.steps(&nodes[1], r),
            meet: render_word(&nodes[0][l].word),
        }
    }

    /// Re-derives every step of a trace from the rule base. Returns the
    /// first failing step description on error.
    pub fn replay(&self, trace: &ProofTrace) -> std::result::Result<(), String> {
        let run = |start: &[MatSymbol], steps: &[ProofStep]| -> std::result::Result<(Vec<MatSymbol>, S), String> {
            let mut w = start.to_vec();
            let mut c = S::one();
            for (k, st) in steps.iter().enumerate() {
                let rule = self
                    .base
                    .rules()
                    .get(st.rule_index)
                    .filter(|r| r.id == st.rule)
                    .ok_or_else(|| format!("step {k}: unknown rule {}", st.rule))?;
                let rel = Self::relator(rule).map_err(|e| e.to_string())?;
                let piece = make_piece(st.rule_index, &rel, st.variant).map_err(|e| e.to_string())?;
                let (p, l) = (st.position, piece.from.len());
                if p + l > w.len() || w[p..p + l] != piece.from[..] {
                    return Err(format!("step {k}: {} does not match at {p}", render_word(&piece.from)));
                }
                let mut next = w[..p].to_vec();
                next.extend_from_slice(&piece.to);
                next.extend_from_slice(&w[p + l..]);
                w = free_reduce(&next);
                c = c * piece.factor.clone();
                if render_word(&w) != st.result {
                    return Err(format!("step {k}: result differs"));
                }
            }
            Ok((w, c))
        };
        let (a, ca) = run(&trace.lhs_word, &trace.lhs_steps)?;
        let (b, cb) = run(&trace.rhs_word, &trace.rhs_steps)?;
        if a != b || ca != cb {
            return Err("sides do not meet".into());
        }
        Ok(())
    }

    /// Expanded, free-reduced form of a word, as the search sees it.
    pub fn canonical(w: &MatWord<S>) -> Vec<MatSymbol> {
        expand(&w.syms)
    }
}
