//! Named graphs and parameterized families.
//!
//! Most families are blow-ups of the 11-vertex graph G*, whose vertex `u_i`
//! has id `i - 1`. In a blow-up the copies of `u_i` occupy one contiguous id
//! block, blocks in increasing `i`, so a named vertex of a member can be
//! located from the multiplicity vector alone.
//!
//! Fixed layouts of the other constructions:
//!
//! * `complete n`: ids `0..n`.
//! * `biclique r s`: sides `0..r` and `r..r+s`.
//! * `star n`: center 0, leaves `1..=n`.
//! * `cycle n`, `path n`: consecutive ids adjacent (and `n-1 ~ 0` for cycles).
//! * `h1 leaves`: K4 on `0..4`, leaves `4..` attached to 0.
//! * `h2 leaves`: K4 on `0..4` minus edge `0-1`, leaves `4..` attached to 0.
//! * `h3`: K4 on `0..4` minus edge `0-1`, plus vertex 4 adjacent to 0 and 2.
//! * `product`: vertex `(g, h)` of `left x right` is `g * |right| + h`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: missing parameter `{param}`")]
    MissingParameter { family: FamilyId, param: String },
    #[error("{family}: unexpected parameter `{param}`")]
    UnexpectedParameter { family: FamilyId, param: String },
    #[error("malformed parameter `{0}`, expected key=value")]
    MalformedParameter(String),
    #[error("{spec}: constraint `{constraint}` violated")]
    Constraint {
        spec: String,
        constraint: &'static str,
    },
    #[error("product needs exactly two operand families")]
    Operands,
    #[error("{0}: parameter grids are not available for this family")]
    GridUnsupported(FamilyId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Complete,
    Biclique,
    Star,
    Cycle,
    Path,
    GStar,
    HStar,
    H1,
    H2,
    H3,
    F11,
    F12,
    F21,
    F22,
    F3,
    F4,
    G11,
    G12,
    G21,
    G22,
    G23,
    G31,
    G32,
    Blowup,
    Product,
}

impl FamilyId {
    pub const ALL: [FamilyId; 25] = [
        FamilyId::Complete,
        FamilyId::Biclique,
        FamilyId::Star,
        FamilyId::Cycle,
        FamilyId::Path,
        FamilyId::GStar,
        FamilyId::HStar,
        FamilyId::H1,
        FamilyId::H2,
        FamilyId::H3,
        FamilyId::F11,
        FamilyId::F12,
        FamilyId::F21,
        FamilyId::F22,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::G11,
        FamilyId::G12,
        FamilyId::G21,
        FamilyId::G22,
        FamilyId::G23,
        FamilyId::G31,
        FamilyId::G32,
        FamilyId::Blowup,
        FamilyId::Product,
    ];

    /// The six families of Definition F and the seven of Definition G.
    pub const BLOWUP_FAMILIES: [FamilyId; 13] = [
        FamilyId::F11,
        FamilyId::F12,
        FamilyId::F21,
        FamilyId::F22,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::G11,
        FamilyId::G12,
        FamilyId::G21,
        FamilyId::G22,
        FamilyId::G23,
        FamilyId::G31,
        FamilyId::G32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Complete => "complete",
            FamilyId::Biclique => "biclique",
            FamilyId::Star => "star",
            FamilyId::Cycle => "cycle",
            FamilyId::Path => "path",
            FamilyId::GStar => "gstar",
            FamilyId::HStar => "hstar",
            FamilyId::H1 => "h1",
            FamilyId::H2 => "h2",
            FamilyId::H3 => "h3",
            FamilyId::F11 => "f11",
            FamilyId::F12 => "f12",
            FamilyId::F21 => "f21",
            FamilyId::F22 => "f22",
            FamilyId::F3 => "f3",
            FamilyId::F4 => "f4",
            FamilyId::G11 => "g11",
            FamilyId::G12 => "g12",
            FamilyId::G21 => "g21",
            FamilyId::G22 => "g22",
            FamilyId::G23 => "g23",
            FamilyId::G31 => "g31",
            FamilyId::G32 => "g32",
            FamilyId::Blowup => "blowup",
            FamilyId::Product => "product",
        }
    }

    /// Parameter names in the order used for lexicographic grids.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            FamilyId::Complete | FamilyId::Star | FamilyId::Cycle | FamilyId::Path => &["n"],
            FamilyId::Biclique => &["r", "s"],
            FamilyId::GStar | FamilyId::HStar | FamilyId::H3 | FamilyId::Product => &[],
            FamilyId::H1 | FamilyId::H2 => &["leaves"],
            FamilyId::F11 | FamilyId::F12 => &["n"],
            FamilyId::F21 | FamilyId::F22 | FamilyId::F3 | FamilyId::F4 => &["n", "r", "s"],
            FamilyId::G11 => &["m", "n"],
            FamilyId::G12 | FamilyId::G21 | FamilyId::G22 | FamilyId::G23 => &["m", "n", "r", "s"],
            FamilyId::G31 | FamilyId::G32 => &["n", "r", "s", "m", "k", "l"],
            FamilyId::Blowup => &[
                "m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8", "m9", "m10", "m11",
            ],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == lower)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// Parameter values aligned with `FamilyId::params`; absent ones read as 0.
struct Vals<'a> {
    names: &'static [&'static str],
    values: &'a [i64],
}

impl Vals<'_> {
    fn get(&self, key: &str) -> i64 {
        self.names
            .iter()
            .position(|n| *n == key)
            .map_or(0, |i| self.values[i])
    }
    fn n(&self) -> i64 {
        self.get("n")
    }
    fn m(&self) -> i64 {
        self.get("m")
    }
    fn r(&self) -> i64 {
        self.get("r")
    }
    fn s(&self) -> i64 {
        self.get("s")
    }
    fn k(&self) -> i64 {
        self.get("k")
    }
    fn l(&self) -> i64 {
        self.get("l")
    }
}

type Check = (&'static str, fn(&Vals) -> bool);

const R_BOUNDS: [Check; 2] = [
    ("n - 1 >= r", |p| p.n() > p.r()),
    ("r >= 1", |p| p.r() >= 1),
];
const S_BOUNDS: [Check; 2] = [
    ("n - 1 >= s", |p| p.n() > p.s()),
    ("s >= 1", |p| p.s() >= 1),
];
const N_AT_LEAST_RS: Check = ("n >= r + s", |p| p.n() >= p.r() + p.s());
const M_POSITIVE: Check = ("m >= 1", |p| p.m() >= 1);
const N_POSITIVE: Check = ("n >= 1", |p| p.n() >= 1);
const KL_BOUNDS: [Check; 5] = [
    ("m - 1 >= l", |p| p.m() > p.l()),
    ("l >= 1", |p| p.l() >= 1),
    ("m - 1 >= k", |p| p.m() > p.k()),
    ("k >= 1", |p| p.k() >= 1),
    ("m >= k + l", |p| p.m() >= p.k() + p.l()),
];

fn constraints(id: FamilyId) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    let rs = |out: &mut Vec<Check>| {
        out.extend(R_BOUNDS);
        out.extend(S_BOUNDS);
    };
    match id {
        FamilyId::Complete | FamilyId::Star | FamilyId::Path => out.push(N_POSITIVE),
        FamilyId::Cycle => out.push(("n >= 3", |p| p.n() >= 3)),
        FamilyId::Biclique => {
            out.push(("r >= 1", |p| p.r() >= 1));
            out.push(("s >= 1", |p| p.s() >= 1));
        }
        FamilyId::H1 | FamilyId::H2 => out.push(("leaves >= 1", |p| p.get("leaves") >= 1)),
        FamilyId::GStar | FamilyId::HStar | FamilyId::H3 | FamilyId::Product => {}
        FamilyId::F11 | FamilyId::F12 => out.push(N_POSITIVE),
        FamilyId::F21 | FamilyId::F22 | FamilyId::F4 => {
            rs(&mut out);
            out.push(N_AT_LEAST_RS);
        }
        FamilyId::F3 => rs(&mut out),
        FamilyId::G11 => {
            out.push(N_POSITIVE);
            out.push(M_POSITIVE);
        }
        FamilyId::G12 | FamilyId::G21 | FamilyId::G23 => {
            out.push(M_POSITIVE);
            rs(&mut out);
            out.push(N_AT_LEAST_RS);
        }
        FamilyId::G22 => {
            out.push(M_POSITIVE);
            rs(&mut out);
        }
        FamilyId::G31 | FamilyId::G32 => {
            rs(&mut out);
            out.push(N_AT_LEAST_RS);
            out.extend(KL_BOUNDS);
        }
        FamilyId::Blowup => {}
    }
    out
}

/// Multiplicities of u1..u11 for the blow-up families of G*.
fn gstar_multiplicities(id: FamilyId, p: &Vals) -> Option<[i64; 11]> {
    let (n, m, r, s, k, l) = (p.n(), p.m(), p.r(), p.s(), p.k(), p.l());
    Some(match id {
        FamilyId::F11 => [1, 1, 1, 1, 1, n, n, 0, 0, 0, 0],
        FamilyId::F12 => [1, 1, 1, 0, 1, n + 1, n + 1, 1, 0, 0, 0],
        FamilyId::F21 => [1, 1, 1, n - r - s + 1, 1, r, n, s, 0, 0, 0],
        FamilyId::F22 => [1, 1, 1, n - r - s, 1, r + 1, n + 1, s + 1, 0, 0, 0],
        FamilyId::F3 => [1, 1, r + 1, s + 1, 1, 0, n - s, n - r, 0, 0, 0],
        FamilyId::F4 => [r + 1, n + 1, s + 1, 1, 1, 0, 0, 0, 0, 0, n - r - s],
        FamilyId::G11 => [m + 1, m + 1, 1, 0, 1, 1, n + 1, n + 1, 0, 0, 0],
        FamilyId::G12 => [m + 1, m + 1, 1, n - r - s, 1, r + 1, n + 1, s + 1, 0, 0, 0],
        FamilyId::G21 => [1, 1, 1, n - r - s + 1, 1, r, n, s, 0, m, m],
        FamilyId::G22 => [1, 1, r + 1, s + 1, 1, 0, n - s, n - r, 0, m, m],
        FamilyId::G23 => [r + 1, n + 1, s + 1, 1, 1, m, m, 0, 0, 0, n - r - s],
        FamilyId::G31 => [m - k - l + 1, 1, 1, n - r - s + 1, 1, r, n, s, l, m, k],
        FamilyId::G32 => [k + 1, l + 1, 1, n - r - s + 1, 1, r, n, s, 0, m - l, m - k],
        FamilyId::HStar => [1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
        FamilyId::GStar => [1; 11],
        FamilyId::Blowup => {
            let mut out = [0; 11];
            out.copy_from_slice(p.values);
            out
        }
        _ => return None,
    })
}

/// Edges of G*, as pairs `(i, j)` for `u_i u_j`.
pub const GSTAR_EDGES: [(usize, usize); 15] = [
    (1, 2),
    (1, 5),
    (1, 10),
    (2, 3),
    (2, 11),
    (3, 4),
    (3, 8),
    (4, 5),
    (4, 7),
    (5, 6),
    (5, 9),
    (6, 7),
    (7, 8),
    (9, 10),
    (10, 11),
];

/// The 11-vertex graph G*; `u_i` has id `i - 1`.
pub fn gstar() -> Graph {
    let pairs: Vec<_> = GSTAR_EDGES.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edge_list(11, &pairs).expect("static edge list is valid")
}

/// H*: a 5-cycle u1..u5 and a 4-cycle u4 u7 u6 u5 sharing the edge u4u5.
pub fn hstar() -> Graph {
    gstar()
        .blowup(&[1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0])
        .expect("seven vertices")
}

/// Standard graphs: `complete [n]`, `biclique [r, s]`, `star [n]`,
/// `cycle [n]`, `path [n]`.
pub fn standard(kind: FamilyId, sizes: &[usize]) -> Result<Graph, FamilyError> {
    let mut spec = FamilySpec::new(kind);
    let names = kind.params();
    if !matches!(
        kind,
        FamilyId::Complete | FamilyId::Biclique | FamilyId::Star | FamilyId::Cycle | FamilyId::Path
    ) {
        return Err(FamilyError::UnknownFamily(kind.name().to_string()));
    }
    if sizes.len() != names.len() {
        return Err(FamilyError::MissingParameter {
            family: kind,
            param: names[sizes.len().min(names.len() - 1)].to_string(),
        });
    }
    for (name, &size) in names.iter().zip(sizes) {
        spec = spec.with(name, size as i64);
    }
    build(&spec)
}

/// A family together with its parameter values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    pub family: FamilyId,
    pub params: BTreeMap<String, i64>,
    /// The two factors of a `product`; empty otherwise.
    pub operands: Vec<FamilySpec>,
}

impl FamilySpec {
    pub fn new(family: FamilyId) -> Self {
        Self {
            family,
            params: BTreeMap::new(),
            operands: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn product(left: FamilySpec, right: FamilySpec) -> Self {
        Self {
            family: FamilyId::Product,
            params: BTreeMap::new(),
            operands: vec![left, right],
        }
    }

    /// Parses `name key=value ...`, e.g. `f21 n=3 r=1 s=1`.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let mut words = text.split_whitespace();
        let family: FamilyId = words
            .next()
            .ok_or_else(|| FamilyError::UnknownFamily(String::new()))?
            .parse()?;
        Self::from_parts(family, words)
    }

    pub fn from_parts<'a, I>(family: FamilyId, assignments: I) -> Result<Self, FamilyError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut spec = Self::new(family);
        for word in assignments {
            let (key, value) = word
                .split_once('=')
                .ok_or_else(|| FamilyError::MalformedParameter(word.to_string()))?;
            let value: i64 = value
                .parse()
                .map_err(|_| FamilyError::MalformedParameter(word.to_string()))?;
            spec.params.insert(key.to_string(), value);
        }
        Ok(spec)
    }

    /// Checks parameter names and the family's constraint set.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let names = self.family.params();
        if let Some(extra) = self.params.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(FamilyError::UnexpectedParameter {
                family: self.family,
                param: extra.clone(),
            });
        }
        if let Some(missing) = names.iter().find(|k| !self.params.contains_key(**k)) {
            return Err(FamilyError::MissingParameter {
                family: self.family,
                param: missing.to_string(),
            });
        }
        self.check_constraints()?;
        if self.family == FamilyId::Blowup {
            if let Some((k, _)) = self.params.iter().find(|(_, &v)| v < 0) {
                return Err(FamilyError::Constraint {
                    spec: self.to_string(),
                    constraint: leak_free_nonnegative(k),
                });
            }
        }
        match (self.family, self.operands.len()) {
            (FamilyId::Product, 2) => self.operands.iter().try_for_each(FamilySpec::validate),
            (FamilyId::Product, _) => Err(FamilyError::Operands),
            (_, 0) => Ok(()),
            _ => Err(FamilyError::Operands),
        }
    }

    fn values(&self) -> Vec<i64> {
        self.family
            .params()
            .iter()
            .map(|k| self.params.get(*k).copied().unwrap_or(0))
            .collect()
    }

    fn check_constraints(&self) -> Result<(), FamilyError> {
        let values = self.values();
        let vals = Vals {
            names: self.family.params(),
            values: &values,
        };
        match violated(self.family, &vals) {
            Some(constraint) => Err(FamilyError::Constraint {
                spec: self.to_string(),
                constraint,
            }),
            None => Ok(()),
        }
    }

    /// Order of the graph [`build`] would produce.
    pub fn order(&self) -> Result<usize, FamilyError> {
        self.validate()?;
        Ok(self.order_unchecked())
    }

    fn order_unchecked(&self) -> usize {
        if self.family == FamilyId::Product {
            return self.operands.iter().map(|o| o.order_unchecked()).product();
        }
        let values = self.values();
        order_of(
            self.family,
            &Vals {
                names: self.family.params(),
                values: &values,
            },
        )
    }
}

fn violated(family: FamilyId, vals: &Vals) -> Option<&'static str> {
    constraints(family)
        .into_iter()
        .find(|(_, ok)| !ok(vals))
        .map(|(c, _)| c)
}

/// Order of a member; products are handled by the caller.
fn order_of(family: FamilyId, p: &Vals) -> usize {
    let n = p.n().max(0) as usize;
    match family {
        FamilyId::Complete | FamilyId::Cycle | FamilyId::Path => n,
        FamilyId::Star => n + 1,
        FamilyId::Biclique => (p.r() + p.s()).max(0) as usize,
        FamilyId::H1 | FamilyId::H2 => 4 + p.get("leaves").max(0) as usize,
        FamilyId::H3 => 5,
        FamilyId::Product => 0,
        id => gstar_multiplicities(id, p)
            .expect("blow-up family")
            .iter()
            .map(|&m| m.max(0))
            .sum::<i64>() as usize,
    }
}

fn leak_free_nonnegative(key: &str) -> &'static str {
    const NAMES: [&str; 11] = [
        "m1 >= 0", "m2 >= 0", "m3 >= 0", "m4 >= 0", "m5 >= 0", "m6 >= 0", "m7 >= 0", "m8 >= 0",
        "m9 >= 0", "m10 >= 0", "m11 >= 0",
    ];
    NAMES
        .iter()
        .find(|c| c.split(' ').next() == Some(key))
        .copied()
        .unwrap_or("multiplicities >= 0")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for name in self.family.params() {
            if let Some(v) = self.params.get(*name) {
                write!(f, " {name}={v}")?;
            }
        }
        for (k, v) in &self.params {
            if !self.family.params().contains(&k.as_str()) {
                write!(f, " {k}={v}")?;
            }
        }
        if !self.operands.is_empty() {
            let parts: Vec<String> = self.operands.iter().map(|o| format!("({o})")).collect();
            write!(f, " {}", parts.join(" x "))?;
        }
        Ok(())
    }
}

/// Builds the graph described by `spec`, validating it first.
pub fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let values = spec.values();
    let p = Vals {
        names: spec.family.params(),
        values: &values,
    };
    let n = p.n().max(0) as usize;
    let graph = match spec.family {
        FamilyId::Complete => {
            let pairs: Vec<_> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            Graph::from_edge_list(n, &pairs)?
        }
        FamilyId::Biclique => {
            let (r, s) = (p.r() as usize, p.s() as usize);
            let pairs: Vec<_> = (0..r)
                .flat_map(|a| (r..r + s).map(move |b| (a, b)))
                .collect();
            Graph::from_edge_list(r + s, &pairs)?
        }
        FamilyId::Star => {
            let pairs: Vec<_> = (1..=n).map(|leaf| (0, leaf)).collect();
            Graph::from_edge_list(n + 1, &pairs)?
        }
        FamilyId::Cycle => {
            let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(n, &pairs)?
        }
        FamilyId::Path => {
            let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(n, &pairs)?
        }
        FamilyId::H1 | FamilyId::H2 => {
            let leaves = p.get("leaves") as usize;
            let mut pairs = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            if spec.family == FamilyId::H1 {
                pairs.push((0, 1));
            }
            pairs.extend((4..4 + leaves).map(|leaf| (0, leaf)));
            Graph::from_edge_list(4 + leaves, &pairs)?
        }
        FamilyId::H3 => {
            Graph::from_edge_list(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 2)])?
        }
        FamilyId::Product => {
            let left = build(&spec.operands[0])?;
            let right = build(&spec.operands[1])?;
            left.cartesian_product(&right)?
        }
        id => {
            let mult = gstar_multiplicities(id, &p).expect("blow-up family");
            let mult: Vec<usize> = mult.iter().map(|&m| m as usize).collect();
            gstar().blowup(&mult)?
        }
    };
    Ok(graph)
}

/// Every valid parameter tuple of `family` whose graph has order at most
/// `max_order`, in lexicographic order of the family's parameter list.
pub fn parameter_grid(family: FamilyId, max_order: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    if matches!(family, FamilyId::Blowup | FamilyId::Product) {
        return Err(FamilyError::GridUnsupported(family));
    }
    let names = family.params();
    let top = max_order as i64;
    let mut values = vec![0i64; names.len()];
    let mut out = Vec::new();
    loop {
        let vals = Vals {
            names,
            values: &values,
        };
        if violated(family, &vals).is_none() && order_of(family, &vals) <= max_order {
            let mut spec = FamilySpec::new(family);
            for (name, &v) in names.iter().zip(&values) {
                spec.params.insert(name.to_string(), v);
            }
            out.push(spec);
        }
        // odometer, last parameter fastest
        let mut pos = names.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if values[pos] < top {
                values[pos] += 1;
                break;
            }
            values[pos] = 0;
        }
    }
}
