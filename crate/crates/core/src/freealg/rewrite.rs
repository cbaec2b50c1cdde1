use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use super::poly::NCPoly;
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::scalars::Ring;

/// Default cap on single rewrite steps per normal-form computation.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// `lhs -> rhs` with every word of `rhs` smaller than `lhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteRule<S> {
    pub lhs: Word,
    pub rhs: NCPoly<S>,
}

impl<S: Ring> RewriteRule<S> {
    /// The relation `lhs - rhs` the rule encodes.
    pub fn relation(&self) -> NCPoly<S> {
        NCPoly::word(self.lhs.clone()) - self.rhs.clone()
    }

    pub fn render(&self) -> String {
        format!("{} -> {}", self.lhs, self.rhs)
    }
}

/// Which redex a normal-form computation contracts first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Finite set of rewrite rules with distinct left-hand sides.
#[derive(Clone, Debug)]
pub struct RewriteSystem<S> {
    rules: HashMap<Word, NCPoly<S>>,
    lhs_lengths: BTreeSet<usize>,
    budget: usize,
}

impl<S: Ring> Default for RewriteSystem<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Ring> RewriteSystem<S> {
    pub fn new() -> Self {
        RewriteSystem {
            rules: HashMap::new(),
            lhs_lengths: BTreeSet::new(),
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rules sorted by left-hand side.
    pub fn rules(&self) -> Vec<RewriteRule<S>> {
        let sorted: BTreeMap<&Word, &NCPoly<S>> = self.rules.iter().collect();
        sorted
            .into_iter()
            .map(|(l, r)| RewriteRule {
                lhs: l.clone(),
                rhs: r.clone(),
            })
            .collect()
    }

    pub fn rule(&self, lhs: &[Letter]) -> Option<&NCPoly<S>> {
        self.rules.get(lhs)
    }

    /// Letters occurring anywhere in the rules, in precedence order.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut set = BTreeSet::new();
        for (l, r) in &self.rules {
            set.extend(l.letters().iter().copied());
            set.extend(r.letters());
        }
        set.into_iter().collect()
    }

    /// Inserts a rule verbatim, replacing any rule with the same lhs.
    pub fn insert_rule(&mut self, rule: RewriteRule<S>) {
        self.rules.insert(rule.lhs, rule.rhs);
        self.refresh_lengths();
    }

    pub fn remove_rule(&mut self, lhs: &[Letter]) -> Option<NCPoly<S>> {
        let r = self.rules.remove(lhs);
        self.refresh_lengths();
        r
    }

    fn refresh_lengths(&mut self) {
        self.lhs_lengths = self.rules.keys().map(Word::len).collect();
    }

    fn find_redex(&self, w: &[Letter], strategy: Strategy) -> Option<(usize, &Word, &NCPoly<S>)> {
        let n = w.len();
        let positions: Box<dyn Iterator<Item = usize>> = match strategy {
            Strategy::Leftmost => Box::new(0..n),
            Strategy::Rightmost => Box::new((0..n).rev()),
        };
        for p in positions {
            for &len in &self.lhs_lengths {
                if p + len > n {
                    break;
                }
                if let Some((lhs, rhs)) = self.rules.get_key_value(&w[p..p + len]) {
                    return Some((p, lhs, rhs));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, w: &[Letter]) -> bool {
        self.find_redex(w, Strategy::Leftmost).is_some()
    }

    pub fn nf(&self, p: &NCPoly<S>) -> Result<NCPoly<S>> {
        self.nf_with(p, Strategy::Leftmost)
    }

    /// Normal form, always contracting the largest reducible monomial first.
    pub fn nf_with(&self, p: &NCPoly<S>, strategy: Strategy) -> Result<NCPoly<S>> {
        let mut todo = p.clone();
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = todo.pop_leading() {
            match self.find_redex(w.letters(), strategy) {
                None => out.add_term(w, c),
                Some((pos, lhs, rhs)) => {
                    steps += 1;
                    if steps > self.budget {
                        return Err(Error::BudgetExceeded(self.budget));
                    }
                    let prefix = &w.letters()[..pos];
                    let suffix = &w.letters()[pos + lhs.len()..];
                    for (rw, rc) in rhs.terms() {
                        todo.add_term(
                            Word::concat(&[prefix, rw.letters(), suffix]),
                            c.clone() * rc.clone(),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// Adds a relation, keeping the system inter-reduced: rules whose lhs the
    /// new leading word divides are turned back into relations, and all
    /// right-hand sides are renormalized. Returns the number of rules added.
    pub fn add_relation(&mut self, rel: &NCPoly<S>) -> Result<usize> {
        let mut pending = vec![rel.clone()];
        let mut added = 0;
        while let Some(p) = pending.pop() {
            let rule = match orient(&p, self) {
                Ok(r) => r,
                Err(Error::NotOrientable { reason, .. }) if reason == REDUCES_TO_ZERO => continue,
                Err(e) => return Err(e),
            };
            let stale: Vec<Word> = self
                .rules
                .keys()
                .filter(|l| contains(l.letters(), rule.lhs.letters()))
                .cloned()
                .collect();
            for l in stale {
                let r = self.rules.remove(&l).expect("stale rule");
                pending.push(NCPoly::word(l) - r);
            }
            self.rules.insert(rule.lhs, rule.rhs);
            self.refresh_lengths();
            added += 1;
            self.tail_reduce()?;
        }
        Ok(added)
    }

    fn tail_reduce(&mut self) -> Result<()> {
        let mut keys: Vec<Word> = self.rules.keys().cloned().collect();
        keys.sort();
        for k in keys {
            let rhs = self.rules[&k].clone();
            let r = self.nf(&rhs)?;
            self.rules.insert(k, r);
        }
        Ok(())
    }
}

pub(crate) const REDUCES_TO_ZERO: &str = "reduces to zero";

pub(crate) fn contains(hay: &[Letter], needle: &[Letter]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Reduces `rel` by `sys` and turns the remainder into a rule whose lhs is
/// its leading word.
pub fn orient<S: Ring>(rel: &NCPoly<S>, sys: &RewriteSystem<S>) -> Result<RewriteRule<S>> {
    let r = sys.nf(rel)?;
    let (w, c) = match r.leading() {
        Some((w, c)) => (w.clone(), c.clone()),
        None => {
            return Err(Error::NotOrientable {
                relation: rel.render(),
                reason: REDUCES_TO_ZERO.into(),
            })
        }
    };
    if w.is_empty() {
        return Err(Error::NotOrientable {
            relation: rel.render(),
            reason: "nonzero constant (inconsistent)".into(),
        });
    }
    let ci = c.inv_unit().map_err(|_| Error::NotOrientable {
        relation: rel.render(),
        reason: format!("leading coefficient {} is not a unit", c.render()),
    })?;
    let mut tail = r;
    tail.pop_leading();
    Ok(RewriteRule {
        lhs: w,
        rhs: (-tail).scale(&ci),
    })
}

/// Builds an inter-reduced system from relations, in order.
pub fn assemble<S: Ring>(rels: &[NCPoly<S>]) -> Result<RewriteSystem<S>> {
    let mut sys = RewriteSystem::new();
    for r in rels {
        sys.add_relation(r)?;
    }
    Ok(sys)
}

/// Critical pair: an overlap word and its two one-step reducts.
#[derive(Clone, Debug)]
pub struct CriticalPair<S> {
    pub word: Word,
    pub left: NCPoly<S>,
    pub right: NCPoly<S>,
}

/// All overlap and inclusion ambiguities of the system, in deterministic order.
pub fn critical_pairs<S: Ring>(sys: &RewriteSystem<S>) -> Vec<CriticalPair<S>> {
    let rules = sys.rules();
    let mut out = Vec::new();
    for r1 in &rules {
        for r2 in &rules {
            let (l1, l2) = (r1.lhs.letters(), r2.lhs.letters());
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] == l2[..k] {
                    let suffix = &l2[k..];
                    let prefix = &l1[..l1.len() - k];
                    out.push(CriticalPair {
                        word: Word::concat(&[l1, suffix]),
                        left: &r1.rhs * &NCPoly::word(Word(suffix.to_vec())),
                        right: &NCPoly::word(Word(prefix.to_vec())) * &r2.rhs,
                    });
                }
            }
            if l1 != l2 && l2.len() < l1.len() {
                for p in 0..=l1.len() - l2.len() {
                    if l1[p..p + l2.len()] == *l2 {
                        let pre = NCPoly::word(Word(l1[..p].to_vec()));
                        let post = NCPoly::word(Word(l1[p + l2.len()..].to_vec()));
                        out.push(CriticalPair {
                            word: r1.lhs.clone(),
                            left: r1.rhs.clone(),
                            right: &(&pre * &r2.rhs) * &post,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Normal forms of `left - right` over all critical pairs that do not resolve.
pub fn unresolved_pairs<S: Ring>(sys: &RewriteSystem<S>) -> Result<Vec<(Word, NCPoly<S>)>> {
    let mut out = Vec::new();
    for cp in critical_pairs(sys) {
        let d = sys.nf(&(cp.left - cp.right))?;
        if !d.is_zero() {
            out.push((cp.word, d));
        }
    }
    Ok(out)
}

/// Rule count at which completion is declared divergent regardless of rounds.
pub const COMPLETION_RULE_CAP: usize = 400;

/// Knuth-Bendix style completion with a round cap.
pub fn complete<S: Ring>(sys: &RewriteSystem<S>, max_rounds: usize) -> Result<RewriteSystem<S>> {
    let mut sys = sys.clone();
    for _ in 0..max_rounds {
        let residuals = unresolved_pairs(&sys)?;
        if residuals.is_empty() {
            return Ok(sys);
        }
        for (_, r) in residuals {
            sys.add_relation(&r)?;
            if sys.len() > COMPLETION_RULE_CAP {
                return Err(Error::CompletionDiverged(max_rounds));
            }
        }
    }
    if unresolved_pairs(&sys)?.is_empty() {
        Ok(sys)
    } else {
        Err(Error::CompletionDiverged(max_rounds))
    }
}
