//! Everything downstream of the representation, built once.

use crate::error::Result;
use crate::invariants::{build_eta, EtaReport, InvariantOperators, ZetaFamily};
use crate::rep::Representation;
use crate::scalar::Coeff;
use crate::singular::Weights;

#[derive(Clone, Debug)]
pub struct Model<C: Coeff> {
    pub rep: Representation<C>,
    pub weights: Weights,
    pub zeta: ZetaFamily<C>,
    pub eta: EtaReport<C>,
    pub ops: InvariantOperators<C>,
}

impl<C: Coeff> Model<C> {
    pub fn build() -> Result<Self> {
        let rep = Representation::build()?;
        Self::from_rep(rep)
    }

    pub fn from_rep(rep: Representation<C>) -> Result<Self> {
        let weights = Weights::from_rep(&rep);
        let zeta = ZetaFamily::build(&rep, &weights)?;
        let eta = build_eta(&rep, &weights, &zeta)?;
        let ops = InvariantOperators::build(&eta.eta, &zeta);
        Ok(Model {
            rep,
            weights,
            zeta,
            eta,
            ops,
        })
    }
}
