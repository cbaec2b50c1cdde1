use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;

/// Generator of the free algebra.
///
/// The derived order is the letter precedence of the monomial order:
/// Kinv < K < Xp < Xm < Omega+- entries < g entries (row-major), then the
/// composite Omega and Sigma entries. Indices are zero-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Kinv,
    K,
    Xp,
    Xm,
    OmPlus(u8, u8),
    OmMinus(u8, u8),
    G(u8, u8),
    /// Entry of Omega = Omega+ Omega-^-1, expanded before normal forms.
    Omega(u8, u8),
    /// Entry of Sigma = g^-1 Omega g, expanded before normal forms.
    Sigma(u8, u8),
}

impl Letter {
    pub fn is_composite(self) -> bool {
        matches!(self, Letter::Omega(..) | Letter::Sigma(..))
    }

    pub fn render(self) -> String {
        match self {
            Letter::Kinv => "Kinv".into(),
            Letter::K => "K".into(),
            Letter::Xp => "Xp".into(),
            Letter::Xm => "Xm".into(),
            Letter::OmPlus(i, j) => format!("Op[{},{}]", i + 1, j + 1),
            Letter::OmMinus(i, j) => format!("Om[{},{}]", i + 1, j + 1),
            Letter::G(i, j) => format!("g[{},{}]", i + 1, j + 1),
            Letter::Omega(i, j) => format!("Omega[{},{}]", i + 1, j + 1),
            Letter::Sigma(i, j) => format!("Sigma[{},{}]", i + 1, j + 1),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Monomial, ordered degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(parts: &[&[Letter]]) -> Word {
        Word(parts.iter().flat_map(|p| p.iter().copied()).collect())
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|l| l.render())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
