pub mod error;
pub mod freealg;
pub mod heisenberg;
pub mod matword;
pub mod rmat;
pub mod scalars;
pub mod star;
pub mod verify;

pub use error::{Error, Result};
pub use freealg::{Letter, NCPoly, RewriteSystem, Word};
pub use scalars::{Coefficient, GaussianRational, QRing, QScalar, Ring};

pub type Scalar = QScalar<GaussianRational>;
pub type RealScalar = QScalar<num_rational::BigRational>;
pub type Poly = NCPoly<Scalar>;
pub type System = RewriteSystem<Scalar>;
pub type RMatrix = rmat::CMatrix<Scalar>;
pub type Algebra = heisenberg::Heisenberg<Scalar>;
