//! Reference data checked by the verification suites: overlap resolutions,
//! coefficient matrices and the identity catalogue.

use crate::algebras::Family;

/// Nontrivial overlaps of the Askey-Wilson system and their common normal
/// form.
pub const DELTA_RESOLUTIONS: [(&str, &str); 3] = [
    (
        "B*C*A",
        "q^-3*(q^2-q^-2)*Omega + q^-6*A*C*B - q^-3*(q^4-q^-4)*A^2 - q^-3*(q^4-q^-4)*B^2 \
         + q^-3*(q^3-q^-3)*A*alpha + q^-3*(q^3-q^-3)*B*beta + q^-3*(q-q^-1)*C*gamma",
    ),
    (
        "B*C*C",
        "q^-6*B*Omega - q^-7*A*C*B^2 - q^-8*A^2*B - q^-8*B^3 + q^-7*A*B*alpha + q^-7*B^2*beta \
         + q^-5*C*B*gamma - q^-3*(q^4-q^-4)*A*C + q^-2*(q^2-q^-2)*C*alpha \
         + q^-4*(q^2-q^-2)^2*B - q^-4*(q-q^-1)*(q^2-q^-2)*beta",
    ),
    (
        "C*C*A",
        "q^-6*A*Omega - q^-7*A^2*C*B - q^-8*A*B^2 - q^-8*A^3 + q^-7*A^2*alpha + q^-7*A*B*beta \
         + q^-5*A*C*gamma - q^-3*(q^4-q^-4)*C*B + q^-2*(q^2-q^-2)*C*beta \
         + q^-4*(q^2-q^-2)^2*A - q^-4*(q-q^-1)*(q^2-q^-2)*alpha",
    ),
];

/// Nontrivial overlaps of the DAHA system with their resolutions.
pub const HHAT_RESOLUTIONS: [(&str, &str); 20] = [
    (
        "t0*X*Y",
        "q^2*Y*X*T0 + q^-2*Y*X^-1*T0 + q^2*Y^-1*X^-1*t0 + q^2*Y^-1*X*T0 - q^2*X*T1 \
         + (q^-2-1)*X*T0^2*T1 + (1-q^-2)*X*t0*T0*T1 - X^-1*T1 - Y*T3 - q^2*Y^-1*T3 \
         - (q-q^-1)*t0*T0*T2 + (1-q^-2)*T0*T1*T3 + q*T2",
    ),
    ("t0*X^-1*Y", "q^-2*Y^-1*X*t0 - q^-2*Y^-1*X*T0 + Y*T3 + q^-2*Y^-1*T3 - q^-1*T2"),
    (
        "t0*X*Y^-1",
        "q^-2*Y*X^-1*t0 - q^-2*Y*X^-1*T0 + (q^-2-1)*X*t0*T0*T1 + (1-q^-2)*X*T0^2*T1 + q^-2*X*T1 \
         + X^-1*T1 + (1-q^-2)*t0*T1*T3 + (q^-2-1)*T0*T1*T3 - q^-1*T2",
    ),
    ("t0*X^-1*Y^-1", "q^2*Y*X*t0 - q^2*Y*X*T0 + q*T2"),
    ("t0*t0*X", "X^-1*t0*T0 + X*T0^2 - X - T0*T3"),
    ("t0*t0*X^-1", "X*t0*T0 - X*T0^2 - X^-1 + T0*T3"),
    ("t0*t0*Y", "Y^-1*t0*T0 + Y*T0^2 - Y - T0*T1"),
    ("t0*t0*Y^-1", "Y*t0*T0 - Y*T0^2 - Y^-1 + T0*T1"),
    ("X*X^-1*Y", "Y"),
    ("X*X^-1*Y^-1", "Y^-1"),
    ("X^-1*X*Y", "Y"),
    ("X^-1*X*Y^-1", "Y^-1"),
    ("X*Y*Y^-1", "X"),
    ("X*Y^-1*Y", "X"),
    ("X^-1*Y*Y^-1", "X^-1"),
    ("X^-1*Y^-1*Y", "X^-1"),
    ("t0*X*X^-1", "t0"),
    ("t0*X^-1*X", "t0"),
    ("t0*Y*Y^-1", "t0"),
    ("t0*Y^-1*Y", "t0"),
];

pub type Entries = &'static [(i32, i32, &'static str)];

/// Coefficient matrices, keyed by `(Y exponent, X exponent)`, of small
/// elements.
pub const SMALL_MATRICES: [(&str, Entries); 5] = [
    ("A", &[(-1, 0, "1"), (1, 0, "1")]),
    ("B", &[(0, -1, "1"), (0, 1, "1")]),
    (
        "C",
        &[
            (-1, 0, "-q^-1*t0^-1*T3"),
            (-1, 1, "q^-1*t0^-2"),
            (0, 0, "t0^-1*T2 + q^-1*T1*T3"),
            (0, 1, "-q^-1*t0^-1*T1"),
            (1, -1, "-q^-1"),
        ],
    ),
    ("theta", &[(-1, 0, "T3"), (-1, 1, "-t0^-1"), (0, 0, "q^-1*t0^2*T2"), (0, 1, "T1"), (1, -1, "t0")]),
    ("X*C", XC),
];

const XC: Entries = &[
    (-1, -1, "q^-3*t0*T3"),
    (-1, 0, "-q^-1*T3^2 - q^-3*t0^2 - q^-3"),
    (-1, 1, "q^-2*(q^-1*t0 + q*t0^-1)*T3"),
    (-1, 2, "-q^-3"),
    (0, -1, "-q^-2*t0*T2"),
    (0, 0, "q^-1*t0*T1 + T2*T3"),
    (1, 0, "-q"),
];

/// `G` from the Casimir-image computation.
pub const G_TEXT: &str = "q^2*Y^2 + q^-2*Y^-2 - q*Y*alpha - q^-1*Y^-1*alpha + q^-2*X^2 + q^-2*X^-2 \
                          - q^-1*X*beta - q^-1*X^-1*beta + q^2 + 3*q^-2 - Omega";

/// One term of the vanishing combination: element, expected matrix, and the
/// T-coefficient it is multiplied by on the right.
pub struct CombinationTerm {
    pub element: &'static str,
    pub entries: Entries,
    pub factor: &'static str,
}

/// Shifts of the matrix of `C` by one row.
const YI_C: Entries = &[
    (-2, 0, "-q^-1*t0^-1*T3"),
    (-2, 1, "q^-1*t0^-2"),
    (-1, 0, "t0^-1*T2 + q^-1*T1*T3"),
    (-1, 1, "-q^-1*t0^-1*T1"),
    (0, -1, "-q^-1"),
];

pub const CASIMIR_COMBINATION: [CombinationTerm; 7] = [
    CombinationTerm {
        element: "C",
        entries: &[
            (-1, 0, "-q^-1*t0^-1*T3"),
            (-1, 1, "q^-1*t0^-2"),
            (0, 0, "t0^-1*T2 + q^-1*T1*T3"),
            (0, 1, "-q^-1*t0^-1*T1"),
            (1, -1, "-q^-1"),
        ],
        factor: "q*(T1*T3 - gamma + q*t0^-1*T2)",
    },
    CombinationTerm { element: "Y^-1*C", entries: YI_C, factor: "-q*t0^-1*T3" },
    CombinationTerm {
        element: "Y^-1*C*(X + X^-1)",
        entries: &[
            (-2, -1, "-q^-1*t0^-1*T3"),
            (-2, 0, "q^-1*t0^-2"),
            (-2, 1, "-q^-1*t0^-1*T3"),
            (-2, 2, "q^-1*t0^-2"),
            (-1, -1, "t0^-1*T2 + q^-1*T1*T3"),
            (-1, 0, "-q^-1*t0^-1*T1"),
            (-1, 1, "t0^-1*T2 + q^-1*T1*T3"),
            (-1, 2, "-q^-1*t0^-1*T1"),
            (0, -2, "-q^-1"),
            (0, 0, "-q^-1"),
        ],
        factor: "q^-1",
    },
    CombinationTerm { element: "X*C", entries: XC, factor: "-q*t0^-1*T1" },
    CombinationTerm {
        element: "Y*X*C",
        entries: &[
            (0, -1, "q^-3*t0*T3"),
            (0, 0, "-q^-1*T3^2 - q^-3*t0^2 - q^-3"),
            (0, 1, "q^-2*(q^-1*t0 + q*t0^-1)*T3"),
            (0, 2, "-q^-3"),
            (1, -1, "-q^-2*t0*T2"),
            (1, 0, "q^-1*t0*T1 + T2*T3"),
            (2, 0, "-q"),
        ],
        factor: "q",
    },
    CombinationTerm {
        element: "Y^-1*X*C",
        entries: &[
            (-2, -1, "q^-3*t0*T3"),
            (-2, 0, "-q^-1*T3^2 - q^-3*t0^2 - q^-3"),
            (-2, 1, "q^-2*(q^-1*t0 + q*t0^-1)*T3"),
            (-2, 2, "-q^-3"),
            (-1, -1, "-q^-2*t0*T2"),
            (-1, 0, "q^-1*t0*T1 + T2*T3"),
            (0, 0, "-q"),
        ],
        factor: "q*t0^-2",
    },
    CombinationTerm {
        element: G_TEXT,
        entries: &[
            (-2, 0, "q^-2"),
            (-1, 0, "-q^-1*alpha"),
            (0, -2, "q^-2"),
            (0, -1, "-q^-1*beta"),
            (0, 0, "q^2 + 3*q^-2 - Omega"),
            (0, 1, "-q^-1*beta"),
            (0, 2, "q^-2"),
            (1, 0, "-q*alpha"),
            (2, 0, "q^2"),
        ],
        factor: "1",
    },
];

/// An equation `lhs = rhs` that must hold after normalization.
pub struct Identity {
    pub group: &'static str,
    pub family: Family,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const fn h(group: &'static str, lhs: &'static str, rhs: &'static str) -> Identity {
    Identity { group, family: Family::Hhat, lhs, rhs }
}

const fn d(group: &'static str, lhs: &'static str, rhs: &'static str) -> Identity {
    Identity { group, family: Family::Delta, lhs, rhs }
}

pub const IDENTITIES: &[Identity] = &[
    h("T-forms", "T0", "t0 + t0^-1"),
    h("T-forms", "T1", "t0^-1*Y + Y^-1*t0"),
    h("T-forms", "T1", "Y*t0^-1 + t0*Y^-1"),
    h("T-forms", "T2", "q*t0^-1*Y*X + q^-1*X^-1*Y^-1*t0"),
    h("T-forms", "T2", "q*X*t0^-1*Y + q^-1*Y^-1*t0*X^-1"),
    h("T-forms", "T2", "q*Y*X*t0^-1 + q^-1*t0*X^-1*Y^-1"),
    h("T-forms", "T3", "t0^-1*X + X^-1*t0"),
    h("T-forms", "T3", "X*t0^-1 + t0*X^-1"),
    h("T-forms", "T1", "t1 + t1^-1"),
    h("T-forms", "T2", "t2 + t2^-1"),
    h("T-forms", "T3", "t3 + t3^-1"),
    h("t0-commutation", "t0*X", "X^-1*t0 + X*T0 - T3"),
    h("t0-commutation", "t0*X^-1", "X*t0 - X*T0 + T3"),
    h("t0-commutation", "t0*Y", "Y^-1*t0 + Y*T0 - T1"),
    h("t0-commutation", "t0*Y^-1", "Y*t0 - Y*T0 + T1"),
    h("t-products", "t0*t2", "q^-1*t3^-1*T1 - q^-1*Y*X^-1"),
    h("t-products", "t0^-1*t2^-1", "q*t1*T3 - q*X^-1*Y"),
    h("t-products", "t1*t3", "q^-1*t0^-1*T2 - q^-2*X^-1*Y^-1"),
    h("t-products", "t1^-1*t3^-1", "q*t2*T0 - Y^-1*X^-1"),
    h("t-products", "t2*t0", "q^-1*t1^-1*T3 - q^-1*Y^-1*X"),
    h("t-products", "t2^-1*t0^-1", "q*t3*T1 - q*X*Y^-1"),
    h("t-products", "t3*t1", "q^-1*t2^-1*T0 - X*Y"),
    h("t-products", "t3^-1*t1^-1", "q*t0*T2 - q^2*Y*X"),
    h("C-forms", "C0", "q*T2*t0 + T3*t1 + q^-1*T0*t2 + T1*t3 - q^-1*T0*T2 - T1*T3"),
    h("C-forms", "C1", "T2*t0 + q*T3*t1 + T0*t2 + q^-1*T1*t3 - T0*T2 - q^-1*T1*T3"),
    h("C-forms", "C2", "q^-1*T2*t0 + T3*t1 + q*T0*t2 + T1*t3 - q^-1*T0*T2 - T1*T3"),
    h("C-forms", "C3", "T2*t0 + q^-1*T3*t1 + T0*t2 + q*T1*t3 - T0*T2 - q^-1*T1*T3"),
    h("C-expansions", "C", "t0*t2 + t2^-1*t0^-1"),
    h("C-expansions", "C", "(q*t3 + q^-1*t3^-1)*T1 - q*X*Y^-1 - q^-1*Y*X^-1"),
    h("C-expansions", "q*t1*t3 + q^-1*t3^-1*t1^-1", "T0*T2 - q*Y*X - q^-1*X^-1*Y^-1"),
    h(
        "C-expansions",
        "q*C + q^-1*(T0*T2 - q*Y*X - q^-1*X^-1*Y^-1) + A*B",
        "(q^-1*t0 + q*t0^-1)*T2 + T1*T3",
    ),
    h(
        "C-expansions",
        "q^-1*C + q*(T0*T2 - q*Y*X - q^-1*X^-1*Y^-1) + B*A",
        "(q^-1*t0 + q*t0^-1)*T2 + T1*T3",
    ),
    h("cyclic-products", "t0*t1*t2*t3", "q^-1"),
    h("cyclic-products", "t1*t2*t3*t0", "q^-1"),
    h("cyclic-products", "t2*t3*t0*t1", "q^-1"),
    h("cyclic-products", "t3*t0*t1*t2", "q^-1"),
    h(
        "X-inverse-C",
        "X^-1*C",
        "q^-2*C*(X + X^-1) - X*C - q^-1*(q^2 - q^-2)*(Y + Y^-1) + q^-1*(q - q^-1)*alpha",
    ),
    h("theta", "q*C", "gamma - theta*t0^-1"),
    h("theta", "theta", "Y*X^-1*t0 - Y^-1*X*t0^-1 + Y^-1*T3 + X*T1 + q^-1*t0^2*T2"),
    h("t0-twisted-commutators", "t0 - t0^-1", "t0 - t0^-1"),
    h("t0-twisted-commutators", "t0*X - X*t0^-1", "B*t0 - T3"),
    h("t0-twisted-commutators", "t0*Y - Y*t0^-1", "A*t0 - T1"),
    h("t0-twisted-commutators", "t0*Y*X - Y*X*t0^-1", "q*(C*t0 - T2) + (A*B - T1*T3)*t0"),
    h(
        "t0-twisted-commutators",
        "(A*B - T1*T3)*t0",
        "A*(B*t0 - T3) + (A*t0 - T1)*t0*T3 - A*t0*(t0 - t0^-1)*T3",
    ),
    h(
        "ABC-relations",
        "A + (q*B*C - q^-1*C*B)/(q^2 - q^-2)",
        "((q^-1*t0 + q*t0^-1)*T1 + T2*T3)/(q + q^-1)",
    ),
    h(
        "ABC-relations",
        "B + (q*C*A - q^-1*A*C)/(q^2 - q^-2)",
        "((q^-1*t0 + q*t0^-1)*T3 + T1*T2)/(q + q^-1)",
    ),
    h(
        "ABC-relations",
        "C + (q*A*B - q^-1*B*A)/(q^2 - q^-2)",
        "((q^-1*t0 + q*t0^-1)*T2 + T3*T1)/(q + q^-1)",
    ),
    d("defining-relations", "A + (q*B*C - q^-1*C*B)/(q^2 - q^-2)", "alpha/(q + q^-1)"),
    d("defining-relations", "B + (q*C*A - q^-1*A*C)/(q^2 - q^-2)", "beta/(q + q^-1)"),
    d("defining-relations", "C + (q*A*B - q^-1*B*A)/(q^2 - q^-2)", "gamma/(q + q^-1)"),
    d(
        "casimir",
        "Omega",
        "q^-1*A*C*B + q^-2*A^2 + q^-2*B^2 + q^2*C^2 - q^-1*A*alpha - q^-1*B*beta - q*C*gamma",
    ),
];

/// `m(arg) = image`, with `m` one of the named automorphisms of the DAHA.
pub struct MorphismIdentity {
    pub group: &'static str,
    pub morphism: &'static str,
    pub arg: &'static str,
    pub image: &'static str,
}

const fn m(group: &'static str, morphism: &'static str, arg: &'static str, image: &'static str) -> MorphismIdentity {
    MorphismIdentity { group, morphism, arg, image }
}

pub const MORPHISM_IDENTITIES: &[MorphismIdentity] = &[
    m("sigma-t-products", "sigma", "t1*t3", "q^-1*t0^-1*t2^-1"),
    m("sigma-t-products", "sigma", "t3^-1*t1^-1", "q*t2*t0"),
    m("sigma-t-products", "sigma", "t0*t2", "q^-1*t3^-1*t1^-1"),
    m("sigma-t-products", "sigma", "t2^-1*t0^-1", "q*t1*t3"),
    m("braid-on-ABC", "tau", "A", "A"),
    m("braid-on-ABC", "tau", "B", "B"),
    m("braid-on-ABC", "tau", "C", "C"),
    m("braid-on-ABC", "rho", "A", "B"),
    m("braid-on-ABC", "rho", "B", "C"),
    m("braid-on-ABC", "rho", "C", "A"),
    m("braid-on-ABC", "sigma", "A", "B"),
    m("braid-on-ABC", "sigma", "B", "A"),
    m("braid-on-ABC", "sigma", "C", "T0*T2 - q*Y*X - q^-1*X^-1*Y^-1"),
    m("z4-cycle", "z4", "C0", "C1"),
    m("z4-cycle", "z4", "C1", "C2"),
    m("z4-cycle", "z4", "C2", "C3"),
    m("z4-cycle", "z4", "C3", "C0"),
];
