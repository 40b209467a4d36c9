//! Static list of every relation the catalog is meant to cover, each mapped to
//! the identity that checks it or to a note saying why it is not checked.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "target", rename_all = "kebab-case")]
pub enum Resolution {
    Identity(&'static str),
    OutOfScope(&'static str),
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ManifestEntry {
    pub key: &'static str,
    pub resolution: Resolution,
}

const fn id(key: &'static str, target: &'static str) -> ManifestEntry {
    ManifestEntry { key, resolution: Resolution::Identity(target) }
}

const fn skip(key: &'static str, note: &'static str) -> ManifestEntry {
    ManifestEntry { key, resolution: Resolution::OutOfScope(note) }
}

const MANIFEST: &[ManifestEntry] = &[
    // operator definitions and group laws
    id("operators/integer-powers", "frac-q-raise-integer"),
    id("operators/product-law", "frac-semigroup"),
    id("operators/inverse", "frac-inverse"),
    id("operators/loop-collapse", "frac-collapse"),
    id("operators/degree-commutator", "p3k3-commutator"),
    skip("operators/m3-power-commutation", "stated abstractly, no numerical consequence to check"),
    // functions and their equation
    id("functions/p-off-cut", "closed-p0mu"),
    id("functions/q-off-cut", "closed-q0mu"),
    id("functions/p-on-cut", "oncut-p-realness"),
    id("functions/q-on-cut", "oncut-q-realness"),
    id("functions/legendre-equation-p", "ode-residual-p"),
    id("functions/legendre-equation-q", "ode-residual-q"),
    skip("functions/sphere-realization", "rotation-group realization beyond the on-cut definitions"),
    // differential recurrences
    id("recurrence/order-raise", "order-raise-recurrence"),
    id("recurrence/order-lower", "order-lower-recurrence"),
    id("recurrence/degree-raise", "degree-raise-recurrence"),
    id("recurrence/degree-lower", "degree-lower-recurrence"),
    skip("recurrence/second-order-steps", "second-order stepping operators are only remarked on"),
    // generating functions
    id("genfun/order-raise-p", "genfun-order-raise-p"),
    id("genfun/order-raise-q", "genfun-order-raise-q"),
    id("genfun/order-lower-p", "genfun-order-lower-p"),
    id("genfun/order-lower-q", "genfun-order-lower-q"),
    id("genfun/degree-lower-p", "genfun-degree-lower-p"),
    id("genfun/degree-lower-q", "genfun-degree-lower-q"),
    id("genfun/degree-raise-p", "genfun-degree-raise-p"),
    id("genfun/degree-raise-q", "genfun-degree-raise-q"),
    id("genfun/legendre-p", "genfun-legendre-p"),
    id("genfun/legendre-q", "genfun-legendre-q"),
    id("genfun/integer-degree-general-order", "genfun-pnmu"),
    id("genfun/double-series-p", "genfun-double-series-p"),
    id("genfun/double-series-q", "genfun-double-series-q"),
    // connection formulas
    id("symmetry/q-negative-order", "q-symmetry"),
    id("symmetry/p-degree-reflection", "p-degree-symmetry"),
    id("symmetry/p-via-q", "p-via-q"),
    id("symmetry/q-via-p", "q-via-p"),
    id("symmetry/whipple", "whipple"),
    // closed-form inputs
    id("closed/q-order-half", "closed-q-half"),
    id("closed/p-order-half", "closed-p-half"),
    id("closed/q-top-order", "closed-q-top-order"),
    id("closed/p-bottom-order", "closed-p-bottom-order"),
    // order shifts
    id("order-shift/weyl-q-raise", "frac-q-raise"),
    id("order-shift/weyl-q-raise-hyperbolic", "int-q-half-angle"),
    id("order-shift/weyl-p-raise", "frac-p-raise-weyl"),
    id("order-shift/riemann-p-raise", "frac-p-raise-riemann"),
    id("order-shift/weyl-q-lower", "frac-q-lower"),
    id("order-shift/weyl-q-lower-contour-phase", "frac-phase-routes"),
    id("order-shift/weyl-p-lower", "frac-p-lower"),
    // degree shifts
    id("degree-shift/k3-p", "frac-k3-p"),
    id("degree-shift/k3-q", "frac-k3-q"),
    id("degree-shift/p3-p", "frac-p3-p"),
    id("degree-shift/p3-q-weyl", "frac-p3-q-weyl"),
    id("degree-shift/p3-q-riemann", "frac-p3-q-riemann"),
    // single integrals
    id("integral/q-half-argument", "int-q-half-argument"),
    id("integral/q-half-angle", "int-q-half-angle"),
    id("integral/p-half-angle", "int-p-half-angle"),
    id("integral/q-top-order-u", "int-q-top-order-u"),
    id("integral/q-top-order-u-at-mu", "int-q-top-order-u-mu"),
    id("integral/q-top-order-argument", "int-q-top-order-argument"),
    id("integral/q-top-order-angle", "int-q-top-order-angle"),
    id("integral/p-bottom-order-argument", "int-p-bottom-order-argument"),
    id("integral/p-bottom-order-angle", "int-p-bottom-order-angle"),
    id("integral/q-lowered-argument", "int-q-lowered-argument"),
    id("integral/q-lowered-angle", "int-q-lowered-angle"),
    id("integral/q-lowered-line", "int-q-lowered-line"),
    id("integral/p-negative-order", "int-p-negative-order-angle"),
    id("integral/k3-p-y", "int-k3-p-y"),
    id("integral/k3-p-angle", "int-k3-p-angle"),
    id("integral/k3-p-u", "int-k3-p-u"),
    id("integral/k3-p-unity", "int-k3-p-unity"),
    id("integral/k3-q-angle", "int-k3-q-angle"),
    id("integral/p3-p-angle", "int-p3-p-angle"),
    id("integral/p3-q-finite", "int-p3-q-finite"),
    // double integrals
    id("double/p-from-unity", "dbl-p-from-unity"),
    id("double/q-from-q00", "dbl-q-from-q00"),
    id("double/p-two-raises", "dbl-p-two-raises"),
    id("double/q-two-raises", "dbl-q-two-raises"),
    id("double/q-degree-pair", "dbl-q-degree-pair"),
    // contraction to Bessel functions
    id("confluent/bessel-k", "confluent-K"),
    id("confluent/bessel-i", "confluent-I"),
    id("confluent/k-order-shift", "k-order-shift"),
    skip("confluent/bessel-machinery", "Bessel functions are evaluated only as an oracle for the limits"),
    skip("algebra/symbolic", "operators are realized numerically only"),
    skip("algebra/unitary-representations", "no numerical content"),
];

pub fn manifest() -> &'static [ManifestEntry] {
    MANIFEST
}
