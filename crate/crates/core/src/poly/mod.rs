//! Exact integer polynomials: bivariate polynomials in `x, y` (Tutte polynomials) and
//! Laurent polynomials in `q` (graded dimensions and Euler characteristics).

mod bipoly;
mod laurent;
mod parse;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use bipoly::BiPoly;
pub use laurent::LaurentPoly;

/// Writes `c*power` with the sign folded into the separator, e.g. ` - 2*x^2*y`.
fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, power: &str) -> fmt::Result {
    let negative = c.is_negative();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let magnitude = c.abs();
    if power.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        write!(f, "{power}")
    } else {
        write!(f, "{magnitude}*{power}")
    }
}
