use crate::diagram::iso::tangles_isomorphic;
use crate::diagram::{Crossing, Diagram, Tangle};
use crate::error::{Error, Result};

/// Turn a tangle over about the vertical axis: the picture is mirrored left
/// to right and every crossing keeps which strand is nearer the viewer
/// after the turn, so over and under trade places as well.
pub fn flip(t: &Tangle) -> Tangle {
    let m = t.boundary().len();
    let crossings = t.crossings().iter().map(|c| {
        let [a, b, c2, d] = c.ends;
        Crossing::new([d, c2, b, a])
    });
    let boundary = (0..m).map(|i| t.boundary()[m - 1 - i]).collect();
    Tangle::new(crossings.collect(), boundary, t.free_loops()).expect("flip of a valid tangle")
}

/// True when a `1/n` turn (two boundary positions) maps the tangle onto itself.
pub fn is_n_rotor(t: &Tangle) -> bool {
    t.arity() >= 2 && tangles_isomorphic(t, &t.rotate(2))
}

/// The link `rotor ∪ stator` with the rotor flipped over.
pub fn rotor_flip(stator: &Tangle, rotor: &Tangle) -> Result<Diagram> {
    if stator.arity() != rotor.arity() {
        return Err(Error::ArityMismatch(rotor.arity(), stator.arity()));
    }
    if !is_n_rotor(rotor) {
        return Err(Error::InvalidParameter("rotor part is not invariant under rotation by one sector".into()));
    }
    flip(rotor).glue(stator)
}
