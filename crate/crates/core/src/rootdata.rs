//! Finite crystallographic root data: Coxeter diagrams, root systems and
//! root-space multiplicity profiles.
//!
//! Simple roots are numbered in the Bourbaki convention throughout (for the
//! B/C series the multiple bond sits at the end of the path, `α_{n-1} α_n` of
//! order 4; for F₄ the bond is between `α_2` and `α_3`). Indices are 0-based
//! in the API and 1-based in all textual formats.

use crate::error::{Error, Result};
use crate::util::SimpleSet;
use std::fmt;

/// An irreducible finite crystallographic series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Series {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl Series {
    pub fn rank(&self) -> usize {
        match *self {
            Series::A(n) | Series::B(n) | Series::C(n) | Series::D(n) | Series::E(n) => n,
            Series::F4 => 4,
            Series::G2 => 2,
        }
    }

    /// Number of positive roots of the series.
    pub fn num_positive_roots(&self) -> usize {
        match *self {
            Series::A(n) => n * (n + 1) / 2,
            Series::B(n) | Series::C(n) => n * n,
            Series::D(n) => n * (n - 1),
            Series::E(6) => 36,
            Series::E(7) => 63,
            Series::E(8) => 120,
            Series::E(_) => unreachable!(),
            Series::F4 => 24,
            Series::G2 => 6,
        }
    }

    /// Degrees of the fundamental invariants; their product is the group order.
    pub fn degrees(&self) -> Vec<usize> {
        match *self {
            Series::A(n) => (2..=n + 1).collect(),
            Series::B(n) | Series::C(n) => (1..=n).map(|i| 2 * i).collect(),
            Series::D(n) => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Series::E(6) => vec![2, 5, 6, 8, 9, 12],
            Series::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            Series::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            Series::E(_) => unreachable!(),
            Series::F4 => vec![2, 6, 8, 12],
            Series::G2 => vec![2, 6],
        }
    }

    pub fn weyl_order(&self) -> u128 {
        self.degrees().iter().map(|&d| d as u128).product()
    }

    /// Whether this series has the same Coxeter matrix as `other`
    /// (B and C coincide as Coxeter systems).
    pub fn same_coxeter_type(&self, other: &Series) -> bool {
        match (*self, *other) {
            (Series::B(n), Series::C(m)) | (Series::C(n), Series::B(m)) => n == m,
            (a, b) => a == b,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Series::A(n) => write!(f, "A{n}"),
            Series::B(n) => write!(f, "B{n}"),
            Series::C(n) => write!(f, "C{n}"),
            Series::D(n) => write!(f, "D{n}"),
            Series::E(n) => write!(f, "E{n}"),
            Series::F4 => write!(f, "F4"),
            Series::G2 => write!(f, "G2"),
        }
    }
}

/// An irreducible factor of a diagram: its series and the simple-root
/// indices it occupies (in diagram order).
#[derive(Clone, Debug)]
pub struct Component {
    pub series: Series,
    pub indices: Vec<usize>,
}

/// A finite crystallographic Coxeter diagram.
///
/// Holds the Coxeter matrix, a compatible Cartan matrix (which orients the
/// multiple bonds), and the decomposition into irreducible components.
/// Construction validates finiteness; anything that is not a product of
/// A–G series is rejected.
#[derive(Clone, Debug)]
pub struct CoxeterDiagram {
    label: String,
    rank: usize,
    coxeter: Vec<Vec<u32>>,
    cartan: Vec<Vec<i64>>,
    components: Vec<Component>,
    defaulted_orientation: bool,
}

impl CoxeterDiagram {
    /// Parse a series label such as `A3`, `C7` or a product `A1xA1`.
    /// Product separators `x`, `X`, `*` and `×` are accepted.
    pub fn parse(label: &str) -> Result<CoxeterDiagram> {
        let mut factors = Vec::new();
        for part in label.split(['x', 'X', '*', '×']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::MalformedInput(format!(
                    "empty factor in type label {label:?}"
                )));
            }
            factors.push(parse_series(part)?);
        }
        Ok(Self::from_factors(&factors))
    }

    /// Build the diagram of a product of series.
    pub fn from_factors(factors: &[Series]) -> CoxeterDiagram {
        let rank: usize = factors.iter().map(|s| s.rank()).sum();
        let mut coxeter = vec![vec![2u32; rank]; rank];
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            coxeter[i][i] = 1;
            cartan[i][i] = 2;
        }
        let mut components = Vec::new();
        let mut offset = 0;
        for series in factors {
            let n = series.rank();
            for (i, j, m) in series_bonds(series) {
                coxeter[offset + i][offset + j] = m;
                coxeter[offset + j][offset + i] = m;
                let (aij, aji) = series_cartan_entries(series, i, j, m);
                cartan[offset + i][offset + j] = aij;
                cartan[offset + j][offset + i] = aji;
            }
            components.push(Component {
                series: *series,
                indices: (offset..offset + n).collect(),
            });
            offset += n;
        }
        let label = factors
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("x");
        CoxeterDiagram {
            label,
            rank,
            coxeter,
            cartan,
            components,
            defaulted_orientation: false,
        }
    }

    /// Build from an explicit Coxeter matrix. Off-diagonal entries must lie
    /// in {2, 3, 4, 6}; 0 encodes ∞ and is rejected as not of finite type.
    /// Multiple bonds are oriented with the higher-indexed root short
    /// (the B convention) and the diagram is marked as defaulted.
    pub fn from_coxeter_matrix(m: &[Vec<i64>]) -> Result<CoxeterDiagram> {
        let coxeter = validate_coxeter_matrix(m)?;
        let components = classify(&coxeter)?;
        let rank = coxeter.len();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        let mut any_multiple = false;
        for i in 0..rank {
            for j in 0..rank {
                if i == j || coxeter[i][j] == 2 {
                    continue;
                }
                let m = coxeter[i][j];
                if m > 3 {
                    any_multiple = true;
                }
                // Higher index short: the short root takes the entry -1,
                // the long root the entry -(m-2).
                let (lo, hi) = (i.min(j), i.max(j));
                cartan[lo][hi] = -((m as i64) - 2);
                cartan[hi][lo] = -1;
                if m == 3 {
                    cartan[lo][hi] = -1;
                }
            }
        }
        let label = components_label(&components);
        Ok(CoxeterDiagram {
            label,
            rank,
            coxeter,
            cartan,
            components,
            defaulted_orientation: any_multiple,
        })
    }

    /// Build from an explicit Cartan matrix, which fixes the bond orientations.
    pub fn from_cartan_matrix(a: &[Vec<i64>]) -> Result<CoxeterDiagram> {
        let rank = a.len();
        for (i, row) in a.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::MalformedInput("Cartan matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(Error::MalformedInput(format!(
                    "Cartan diagonal entry a[{}][{}] must be 2",
                    i + 1,
                    i + 1
                )));
            }
        }
        let mut coxeter = vec![vec![2u32; rank]; rank];
        for i in 0..rank {
            coxeter[i][i] = 1;
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let prod = a[i][j] * a[j][i];
                if a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::MalformedInput(format!(
                        "Cartan entries a[{}][{}], a[{}][{}] are inconsistent",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                coxeter[i][j] = match prod {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    _ => {
                        return Err(Error::NotFiniteType(format!(
                            "bond product a[{}][{}]·a[{}][{}] = {} exceeds 3",
                            i + 1,
                            j + 1,
                            j + 1,
                            i + 1,
                            prod
                        )))
                    }
                };
            }
        }
        let mut components = classify(&coxeter)?;
        orient_bc_components(a, &coxeter, &mut components);
        let label = components_label(&components);
        Ok(CoxeterDiagram {
            label,
            rank,
            coxeter,
            cartan: a.to_vec(),
            components,
            defaulted_orientation: false,
        })
    }

    /// Parse the plain-text matrix file format: first line the rank, then
    /// the Coxeter matrix, then optionally a Cartan matrix block.
    /// Blank lines and `#` comments are ignored.
    pub fn from_matrix_file(text: &str) -> Result<CoxeterDiagram> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row: std::result::Result<Vec<i64>, _> =
                line.split_whitespace().map(|t| t.parse::<i64>()).collect();
            rows.push(row.map_err(|e| Error::MalformedInput(format!("bad integer: {e}")))?);
        }
        if rows.is_empty() || rows[0].len() != 1 {
            return Err(Error::MalformedInput(
                "matrix file must start with a single-integer rank line".into(),
            ));
        }
        let rank = rows[0][0];
        if rank < 1 || rank > 64 {
            return Err(Error::MalformedInput(format!("unsupported rank {rank}")));
        }
        let rank = rank as usize;
        let body = &rows[1..];
        if body.len() != rank && body.len() != 2 * rank {
            return Err(Error::MalformedInput(format!(
                "expected {rank} matrix rows (plus an optional Cartan block), got {}",
                body.len()
            )));
        }
        let coxeter_rows = &body[..rank];
        if body.len() == rank {
            Self::from_coxeter_matrix(coxeter_rows)
        } else {
            let diagram = Self::from_cartan_matrix(&body[rank..])?;
            let check = validate_coxeter_matrix(coxeter_rows)?;
            if check != diagram.coxeter {
                return Err(Error::MalformedInput(
                    "Cartan block is inconsistent with the Coxeter matrix".into(),
                ));
            }
            Ok(diagram)
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonical label, e.g. `A3` or `B2xA1`. Recognized from the matrix
    /// when the diagram was not built from a label.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// True when the input fixed no bond orientation and the B convention
    /// was applied. Root coordinates and custom multiplicity keys depend on
    /// the orientation; balanced-ideal counts do not.
    pub fn defaulted_orientation(&self) -> bool {
        self.defaulted_orientation
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.series.weyl_order()).product()
    }

    /// The full set of simple roots as a [`SimpleSet`].
    pub fn full_set(&self) -> SimpleSet {
        SimpleSet::full(self.rank)
    }
}

/// Bonds (i, j, m) with i < j of an irreducible series, 0-based within the series.
fn series_bonds(series: &Series) -> Vec<(usize, usize, u32)> {
    let n = series.rank();
    match *series {
        Series::A(_) => (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect(),
        Series::B(_) | Series::C(_) => {
            let mut bonds: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 3)).collect();
            bonds.last_mut().unwrap().2 = 4;
            bonds
        }
        Series::D(_) => {
            assert!(n >= 3, "D series needs rank ≥ 3");
            // Path 1..n-2 with both n-1 and n attached to n-2.
            let mut bonds: Vec<_> = (0..n - 3).map(|i| (i, i + 1, 3)).collect();
            bonds.push((n - 3, n - 2, 3));
            bonds.push((n - 3, n - 1, 3));
            bonds
        }
        Series::E(_) => {
            // Bourbaki: path 1-3-4-5-...-n with 2 attached to 4.
            let mut bonds = vec![(0, 2, 3), (1, 3, 3)];
            for i in 2..n - 1 {
                bonds.push((i, i + 1, 3));
            }
            bonds
        }
        Series::F4 => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
        Series::G2 => vec![(0, 1, 6)],
    }
}

/// Cartan entries (a_ij, a_ji) for bond (i, j) of the series, where
/// a_ij = ⟨α_i, α_j^∨⟩.
fn series_cartan_entries(series: &Series, i: usize, j: usize, m: u32) -> (i64, i64) {
    if m == 3 {
        return (-1, -1);
    }
    let n = series.rank();
    match *series {
        // B_n: α_n short, so a_{n-1,n} = -2.
        Series::B(_) => {
            debug_assert_eq!((i, j), (n - 2, n - 1));
            (-2, -1)
        }
        // C_n: α_n long.
        Series::C(_) => {
            debug_assert_eq!((i, j), (n - 2, n - 1));
            (-1, -2)
        }
        // F4: α_1, α_2 long, α_3, α_4 short.
        Series::F4 => {
            debug_assert_eq!((i, j), (1, 2));
            (-2, -1)
        }
        // G2: α_1 short, α_2 long.
        Series::G2 => (-1, -3),
        _ => unreachable!("multiple bond in simply-laced series"),
    }
}

fn validate_coxeter_matrix(m: &[Vec<i64>]) -> Result<Vec<Vec<u32>>> {
    let rank = m.len();
    let mut out = vec![vec![0u32; rank]; rank];
    for (i, row) in m.iter().enumerate() {
        if row.len() != rank {
            return Err(Error::MalformedInput("Coxeter matrix is not square".into()));
        }
        for (j, &v) in row.iter().enumerate() {
            if i == j {
                if v != 1 {
                    return Err(Error::MalformedInput(format!(
                        "Coxeter diagonal entry m[{}][{}] must be 1",
                        i + 1,
                        j + 1
                    )));
                }
                out[i][j] = 1;
                continue;
            }
            if m[j][i] != v {
                return Err(Error::MalformedInput("Coxeter matrix is not symmetric".into()));
            }
            match v {
                2 | 3 | 4 | 6 => out[i][j] = v as u32,
                0 => {
                    return Err(Error::NotFiniteType(format!(
                        "infinite bond m[{}][{}] = ∞",
                        i + 1,
                        j + 1
                    )))
                }
                5 => {
                    return Err(Error::NotFiniteType(
                        "bond of order 5 is not crystallographic".into(),
                    ))
                }
                v if v >= 7 => {
                    return Err(Error::NotFiniteType(format!(
                        "bond of order {v} is not crystallographic"
                    )))
                }
                _ => {
                    return Err(Error::MalformedInput(format!(
                        "Coxeter entry m[{}][{}] = {v} is not in {{2,3,4,6}} (or 0 for ∞)",
                        i + 1,
                        j + 1
                    )))
                }
            }
        }
    }
    Ok(out)
}

/// Decompose a validated Coxeter matrix into irreducible components and
/// classify each against the finite crystallographic list.
fn classify(coxeter: &[Vec<u32>]) -> Result<Vec<Component>> {
    let rank = coxeter.len();
    let mut seen = vec![false; rank];
    let mut components = Vec::new();
    for start in 0..rank {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut nodes = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for u in 0..rank {
                if !seen[u] && coxeter[v][u] >= 3 {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        nodes.sort_unstable();
        let series = classify_component(coxeter, &nodes)?;
        components.push(Component {
            series,
            indices: nodes,
        });
    }
    // Deterministic order: by lowest simple-root index.
    components.sort_by_key(|c| c.indices[0]);
    Ok(components)
}

fn classify_component(coxeter: &[Vec<u32>], nodes: &[usize]) -> Result<Series> {
    let n = nodes.len();
    let edges: Vec<(usize, usize, u32)> = {
        let mut e = Vec::new();
        for (a, &i) in nodes.iter().enumerate() {
            for &j in &nodes[a + 1..] {
                if coxeter[i][j] >= 3 {
                    e.push((i, j, coxeter[i][j]));
                }
            }
        }
        e
    };
    if edges.len() != n - 1 {
        return Err(Error::NotFiniteType(
            "component contains a cycle, which is not of finite type".into(),
        ));
    }
    let degree = |v: usize| edges.iter().filter(|(a, b, _)| *a == v || *b == v).count();
    let sixes: Vec<_> = edges.iter().filter(|e| e.2 == 6).collect();
    let fours: Vec<_> = edges.iter().filter(|e| e.2 == 4).collect();

    if !sixes.is_empty() {
        if n == 2 && sixes.len() == 1 {
            return Ok(Series::G2);
        }
        return Err(Error::NotFiniteType(
            "a bond of order 6 only occurs in G2".into(),
        ));
    }
    if fours.len() > 1 {
        return Err(Error::NotFiniteType(
            "more than one bond of order 4 in a component".into(),
        ));
    }
    let branch_nodes: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if let Some(&(a, b, _)) = fours.first() {
        // B/C or F4: the underlying tree must be a path.
        if !branch_nodes.is_empty() || nodes.iter().any(|&v| degree(v) > 2) {
            return Err(Error::NotFiniteType(
                "a branch node cannot coexist with a multiple bond".into(),
            ));
        }
        let path = path_order(nodes, &edges)?;
        let pos_a = path.iter().position(|&v| v == *a).unwrap();
        let pos_b = path.iter().position(|&v| v == *b).unwrap();
        let (lo, hi) = (pos_a.min(pos_b), pos_a.max(pos_b));
        if lo == 0 || hi == n - 1 {
            return Ok(Series::B(n));
        }
        if n == 4 && lo == 1 && hi == 2 {
            return Ok(Series::F4);
        }
        return Err(Error::NotFiniteType(
            "bond of order 4 in the interior of a path only occurs in F4".into(),
        ));
    }
    // Simply laced: A, D or E.
    match branch_nodes.len() {
        0 => Ok(Series::A(n)),
        1 => {
            let center = branch_nodes[0];
            if degree(center) != 3 {
                return Err(Error::NotFiniteType(
                    "branch node of degree ≥ 4 is not of finite type".into(),
                ));
            }
            let mut arms = arm_lengths(center, nodes, &edges);
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(Series::D(n)),
                [1, 2, 2] => Ok(Series::E(6)),
                [1, 2, 3] => Ok(Series::E(7)),
                [1, 2, 4] => Ok(Series::E(8)),
                _ => Err(Error::NotFiniteType(format!(
                    "branch with arm lengths {arms:?} is not of finite type"
                ))),
            }
        }
        _ => Err(Error::NotFiniteType(
            "more than one branch node is not of finite type".into(),
        )),
    }
}

/// Order the nodes of a path-shaped component from one end to the other.
fn path_order(nodes: &[usize], edges: &[(usize, usize, u32)]) -> Result<Vec<usize>> {
    if nodes.len() == 1 {
        return Ok(nodes.to_vec());
    }
    let degree = |v: usize| edges.iter().filter(|(a, b, _)| *a == v || *b == v).count();
    let start = nodes
        .iter()
        .copied()
        .find(|&v| degree(v) == 1)
        .ok_or_else(|| Error::NotFiniteType("component is not a tree".into()))?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    loop {
        let cur = *order.last().unwrap();
        let next = edges.iter().find_map(|&(a, b, _)| {
            if a == cur && b != prev {
                Some(b)
            } else if b == cur && a != prev {
                Some(a)
            } else {
                None
            }
        });
        match next {
            Some(v) => {
                prev = cur;
                order.push(v);
            }
            None => break,
        }
    }
    if order.len() != nodes.len() {
        return Err(Error::NotFiniteType("component is not a path".into()));
    }
    Ok(order)
}

/// Arm lengths (edge counts) of the three branches at `center`.
fn arm_lengths(center: usize, nodes: &[usize], edges: &[(usize, usize, u32)]) -> Vec<usize> {
    let neighbors: Vec<usize> = edges
        .iter()
        .filter_map(|&(a, b, _)| {
            if a == center {
                Some(b)
            } else if b == center {
                Some(a)
            } else {
                None
            }
        })
        .collect();
    neighbors
        .iter()
        .map(|&first| {
            let mut len = 1;
            let mut prev = center;
            let mut cur = first;
            loop {
                let next = edges.iter().find_map(|&(a, b, _)| {
                    if a == cur && b != prev {
                        Some(b)
                    } else if b == cur && a != prev {
                        Some(a)
                    } else {
                        None
                    }
                });
                match next {
                    Some(v) if nodes.contains(&v) => {
                        prev = cur;
                        cur = v;
                        len += 1;
                    }
                    _ => break,
                }
            }
            len
        })
        .collect()
}

/// Distinguish B from C when a Cartan matrix fixes the orientation: the
/// series is C when the terminal root of the order-4 bond is long.
fn orient_bc_components(cartan: &[Vec<i64>], coxeter: &[Vec<u32>], components: &mut [Component]) {
    for comp in components.iter_mut() {
        let n = comp.indices.len();
        if !matches!(comp.series, Series::B(_)) || n < 3 {
            continue;
        }
        let bond = comp
            .indices
            .iter()
            .flat_map(|&i| comp.indices.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i < j && coxeter[i][j] == 4)
            .expect("B series has an order-4 bond");
        let degree = |v: usize| {
            comp.indices
                .iter()
                .filter(|&&u| u != v && coxeter[v][u] >= 3)
                .count()
        };
        let (terminal, interior) = if degree(bond.0) == 1 {
            (bond.0, bond.1)
        } else {
            (bond.1, bond.0)
        };
        if cartan[interior][terminal] == -1 && cartan[terminal][interior] == -2 {
            comp.series = Series::C(n);
        }
    }
}

fn components_label(components: &[Component]) -> String {
    components
        .iter()
        .map(|c| c.series.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

fn parse_series(part: &str) -> Result<Series> {
    let mut chars = part.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::MalformedInput("empty series".into()))?;
    let num: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::MalformedInput(format!("bad series label {part:?}")))?;
    let series = match letter.to_ascii_uppercase() {
        'A' if num >= 1 => Series::A(num),
        'B' if num >= 2 => Series::B(num),
        'C' if num >= 2 => Series::C(num),
        'D' if num >= 3 => Series::D(num),
        'E' if (6..=8).contains(&num) => Series::E(num),
        'F' if num == 4 => Series::F4,
        'G' if num == 2 => Series::G2,
        'B' | 'C' if num == 1 => Series::A(1),
        _ => {
            return Err(Error::MalformedInput(format!(
                "unsupported series label {part:?}"
            )))
        }
    };
    Ok(series)
}

/// A signed reference to a positive root: the index and whether the sign
/// is flipped.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedRoot {
    pub index: usize,
    pub negative: bool,
}

/// The positive roots of a finite crystallographic root system, as integer
/// vectors in the simple-root basis, with the simple-reflection action.
///
/// Simple roots occupy indices `0..rank` in diagram order; the remaining
/// roots follow in the deterministic order of the closure construction
/// (by height, then lexicographically by coordinates).
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: CoxeterDiagram,
    roots: Vec<Vec<i64>>,
    /// reflection[i][r] = s_i(α_r) as a signed root index.
    reflection: Vec<Vec<SignedRoot>>,
}

impl RootSystem {
    pub fn new(diagram: CoxeterDiagram) -> RootSystem {
        let rank = diagram.rank();
        let cartan = diagram.cartan_matrix();
        let mut roots: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        let mut index: std::collections::HashMap<Vec<i64>, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        // Closure under simple reflections, processed by generation so the
        // final order is by height then coordinates.
        let mut frontier: Vec<usize> = (0..rank).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &r in &frontier {
                for i in 0..rank {
                    let image = reflect_coords(cartan, &roots[r], i);
                    if image.iter().all(|&c| c >= 0) && !index.contains_key(&image) {
                        next.push(image);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            frontier = Vec::new();
            for image in next {
                if !index.contains_key(&image) {
                    let id = roots.len();
                    index.insert(image.clone(), id);
                    roots.push(image);
                    frontier.push(id);
                }
            }
        }
        let reflection = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        let image = reflect_coords(cartan, r, i);
                        if image.iter().all(|&c| c <= 0) {
                            let neg: Vec<i64> = image.iter().map(|&c| -c).collect();
                            SignedRoot {
                                index: index[&neg],
                                negative: true,
                            }
                        } else {
                            SignedRoot {
                                index: index[&image],
                                negative: false,
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        RootSystem {
            diagram,
            roots,
            reflection,
        }
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }

    /// s_i(α_r) as a signed positive-root reference.
    #[inline]
    pub fn simple_reflection(&self, i: usize, r: usize) -> SignedRoot {
        self.reflection[i][r]
    }
}

fn reflect_coords(cartan: &[Vec<i64>], coords: &[i64], i: usize) -> Vec<i64> {
    // s_i subtracts ⟨β, α_i^∨⟩ α_i, i.e. the pairing of the coordinates
    // with column i of the Cartan matrix.
    let pairing: i64 = coords
        .iter()
        .zip(cartan.iter())
        .map(|(&c, row)| c * row[i])
        .sum();
    let mut out = coords.to_vec();
    out[i] -= pairing;
    out
}

/// Per-root weights dim 𝔤_α. Split real forms have weight 1 everywhere,
/// complex groups weight 2; restricted root systems need a custom table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    weights: Vec<u64>,
}

impl MultiplicityProfile {
    pub fn split(rs: &RootSystem) -> MultiplicityProfile {
        MultiplicityProfile {
            weights: vec![1; rs.num_positive()],
        }
    }

    pub fn complex(rs: &RootSystem) -> MultiplicityProfile {
        MultiplicityProfile {
            weights: vec![2; rs.num_positive()],
        }
    }

    /// Build from explicit (coordinates, weight) pairs; every positive root
    /// must receive a weight ≥ 1.
    pub fn custom(rs: &RootSystem, table: &[(Vec<i64>, u64)]) -> Result<MultiplicityProfile> {
        let mut weights = vec![0u64; rs.num_positive()];
        for (coords, weight) in table {
            let idx = rs
                .positive_roots()
                .iter()
                .position(|r| r == coords)
                .ok_or_else(|| {
                    Error::MalformedInput(format!("{coords:?} is not a positive root"))
                })?;
            if *weight == 0 {
                return Err(Error::MalformedInput(format!(
                    "weight for root {coords:?} must be ≥ 1"
                )));
            }
            weights[idx] = *weight;
        }
        if let Some(missing) = weights.iter().position(|&w| w == 0) {
            return Err(Error::MissingRootWeight(format!(
                "{:?}",
                rs.root(missing)
            )));
        }
        Ok(MultiplicityProfile { weights })
    }

    /// Parse the one-line-per-root text format: `coordinates… weight`.
    pub fn parse_custom(rs: &RootSystem, text: &str) -> Result<MultiplicityProfile> {
        let mut table = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: std::result::Result<Vec<i64>, _> =
                line.split_whitespace().map(|t| t.parse::<i64>()).collect();
            let nums = nums.map_err(|e| Error::MalformedInput(format!("bad integer: {e}")))?;
            if nums.len() != rs.rank() + 1 {
                return Err(Error::MalformedInput(format!(
                    "expected {} coordinates plus a weight, got {} numbers",
                    rs.rank(),
                    nums.len()
                )));
            }
            let weight = *nums.last().unwrap();
            if weight < 1 {
                return Err(Error::MalformedInput("weights must be ≥ 1".into()));
            }
            table.push((nums[..rs.rank()].to_vec(), weight as u64));
        }
        Self::custom(rs, &table)
    }

    #[inline]
    pub fn weight(&self, root: usize) -> u64 {
        self.weights[root]
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_diagram() {
        let d = CoxeterDiagram::parse("A3").unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.coxeter_matrix()[0][1], 3);
        assert_eq!(d.coxeter_matrix()[1][2], 3);
        assert_eq!(d.coxeter_matrix()[0][2], 2);
        assert_eq!(d.label(), "A3");
    }

    #[test]
    fn c3_diagram_orientation() {
        let d = CoxeterDiagram::parse("C3").unwrap();
        assert_eq!(d.coxeter_matrix()[1][2], 4);
        // α_3 long: a_{23} = -1, a_{32} = -2.
        assert_eq!(d.cartan_matrix()[1][2], -1);
        assert_eq!(d.cartan_matrix()[2][1], -2);
    }

    #[test]
    fn affine_rejected() {
        let m = vec![vec![1, 0], vec![0, 1]];
        match CoxeterDiagram::from_coxeter_matrix(&m) {
            Err(Error::NotFiniteType(_)) => {}
            other => panic!("expected NotFiniteType, got {other:?}"),
        }
    }

    #[test]
    fn pentagon_rejected() {
        let m = vec![vec![1, 5], vec![5, 1]];
        assert!(matches!(
            CoxeterDiagram::from_coxeter_matrix(&m),
            Err(Error::NotFiniteType(_))
        ));
    }

    #[test]
    fn matrix_recognition() {
        // B3 given as a bare Coxeter matrix: recognized, B orientation applied.
        let m = vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]];
        let d = CoxeterDiagram::from_coxeter_matrix(&m).unwrap();
        assert_eq!(d.label(), "B3");
        assert!(d.defaulted_orientation());
        // E8 shape from its own generated matrix.
        let e8 = CoxeterDiagram::parse("E8").unwrap();
        let m: Vec<Vec<i64>> = e8
            .coxeter_matrix()
            .iter()
            .map(|row| row.iter().map(|&v| v as i64).collect())
            .collect();
        assert_eq!(CoxeterDiagram::from_coxeter_matrix(&m).unwrap().label(), "E8");
    }

    #[test]
    fn product_label() {
        let d = CoxeterDiagram::parse("A1xB2").unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.components().len(), 2);
        assert_eq!(d.weyl_order(), 2 * 8);
    }

    #[test]
    fn root_counts_match_classification() {
        let cases = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A7", 28),
            ("B2", 4),
            ("B5", 25),
            ("C3", 9),
            ("D4", 12),
            ("D6", 30),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
            ("A2xG2", 9),
        ];
        for (label, count) in cases {
            let rs = RootSystem::new(CoxeterDiagram::parse(label).unwrap());
            assert_eq!(rs.num_positive(), count, "positive roots of {label}");
        }
    }

    #[test]
    fn a2_closure_by_hand() {
        let rs = RootSystem::new(CoxeterDiagram::parse("A2").unwrap());
        let mut roots = rs.positive_roots().to_vec();
        roots.sort();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn b2_closure_by_hand() {
        let rs = RootSystem::new(CoxeterDiagram::parse("B2").unwrap());
        let mut roots = rs.positive_roots().to_vec();
        roots.sort();
        assert_eq!(
            roots,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn reflection_table_involution() {
        for label in ["A3", "B3", "C4", "D4", "F4", "G2"] {
            let rs = RootSystem::new(CoxeterDiagram::parse(label).unwrap());
            for i in 0..rs.rank() {
                for r in 0..rs.num_positive() {
                    let once = rs.simple_reflection(i, r);
                    let twice = rs.simple_reflection(i, once.index);
                    assert_eq!(twice.index, r);
                    assert_eq!(once.negative ^ twice.negative, false);
                    if r == i {
                        assert!(once.negative);
                    } else {
                        assert!(!once.negative);
                    }
                }
            }
        }
    }

    #[test]
    fn all_roots_nonnegative() {
        for label in ["A4", "B4", "C4", "D5", "F4", "G2", "E6"] {
            let rs = RootSystem::new(CoxeterDiagram::parse(label).unwrap());
            for r in rs.positive_roots() {
                assert!(r.iter().all(|&c| c >= 0));
            }
        }
    }

    #[test]
    fn profiles() {
        let rs = RootSystem::new(CoxeterDiagram::parse("A3").unwrap());
        assert!(MultiplicityProfile::split(&rs).weights().iter().all(|&w| w == 1));
        assert!(MultiplicityProfile::complex(&rs).weights().iter().all(|&w| w == 2));
        assert_eq!(MultiplicityProfile::complex(&rs).total(), 12);

        // B2 custom: short roots e_i weight 3, long roots weight 1.
        let rs = RootSystem::new(CoxeterDiagram::parse("B2").unwrap());
        let table = vec![
            (vec![1, 0], 1),
            (vec![0, 1], 3),
            (vec![1, 1], 3),
            (vec![1, 2], 1),
        ];
        let prof = MultiplicityProfile::custom(&rs, &table).unwrap();
        assert_eq!(prof.total(), 8);
        let mut weights = prof.weights().to_vec();
        weights.sort_unstable();
        assert_eq!(weights, vec![1, 1, 3, 3]);

        let incomplete = vec![(vec![1, 0], 1)];
        assert!(matches!(
            MultiplicityProfile::custom(&rs, &incomplete),
            Err(Error::MissingRootWeight(_))
        ));
    }

    #[test]
    fn matrix_file_roundtrip() {
        let text = "3\n1 3 2\n3 1 4\n2 4 1\n";
        let d = CoxeterDiagram::from_matrix_file(text).unwrap();
        assert_eq!(d.label(), "B3");
        // With a Cartan block the orientation is explicit: C3.
        let text = "3\n1 3 2\n3 1 4\n2 4 1\n2 -1 0\n-1 2 -1\n0 -2 2\n";
        let d = CoxeterDiagram::from_matrix_file(text).unwrap();
        assert_eq!(d.label(), "C3");
        assert!(!d.defaulted_orientation());
    }
}
