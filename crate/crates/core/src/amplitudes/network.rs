use crate::exact::{crat, crat_i, CRat};
use num_traits::{One, Zero};
use thiserror::Error;

pub type Color = u8;
pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("enumeration cap exceeded: {colorings} colorings over cap {cap}")]
    EnumerationCap { colorings: u128, cap: u64 },
    #[error("vertex {vertex} is not trivalent (degree {degree})")]
    NotTrivalent { vertex: VertexId, degree: usize },
    #[error("matrix weight at vertex {vertex} needs degree 2 (got {degree})")]
    NotChainVertex { vertex: VertexId, degree: usize },
    #[error("cyclic order for vertex {vertex} must permute its incident edges")]
    BadCyclicOrder { vertex: VertexId },
    #[error("color {color} out of range for {colors} colors")]
    BadColor { color: Color, colors: usize },
    #[error("penrose evaluation needs exactly 3 colors (got {colors})")]
    NeedThreeColors { colors: usize },
    #[error("bad network file: {message}")]
    Format { message: String },
}

/// Weight assigned to a vertex as a function of the incident edge
/// colors in cyclic order.
#[derive(Clone, Debug)]
pub enum VertexWeight {
    /// Weight 1 regardless of colors (counting vertex).
    One,
    /// A fixed scalar regardless of colors.
    Const(CRat),
    /// Degree-2 vertex: entry `(first color, second color)` of a
    /// transition matrix.
    Matrix(crate::exact::CMatrix),
    /// `i * epsilon_abc` over the three incident colors in cyclic
    /// order: +1/-1 for even/odd permutations, 0 on repeats.
    PenroseEpsilon,
}

#[derive(Clone, Debug)]
struct Vertex {
    /// Incident edges in cyclic order (planar embedding data).
    incident: Vec<EdgeId>,
    weight: VertexWeight,
}

/// An edge-colored network with per-vertex weights: the partition
/// function sums the product of vertex weights over all colorings of
/// the free edges, holding boundary-fixed colors constant.
#[derive(Clone, Debug)]
pub struct Network {
    colors: usize,
    vertices: Vec<Vertex>,
    /// Endpoint pair per edge (equal endpoints make a self-loop).
    edges: Vec<(VertexId, VertexId)>,
    fixed: Vec<Option<Color>>,
}

impl Network {
    pub fn new(colors: usize) -> Self {
        assert!(colors >= 1, "need at least one color");
        Network {
            colors,
            vertices: Vec::new(),
            edges: Vec::new(),
            fixed: Vec::new(),
        }
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn add_vertex(&mut self, weight: VertexWeight) -> VertexId {
        self.vertices.push(Vertex {
            incident: Vec::new(),
            weight,
        });
        self.vertices.len() - 1
    }

    /// New edge appended to both endpoints' cyclic orders.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> EdgeId {
        let id = self.edges.len();
        self.edges.push((a, b));
        self.fixed.push(None);
        self.vertices[a].incident.push(id);
        if b != a {
            self.vertices[b].incident.push(id);
        } else {
            self.vertices[a].incident.push(id);
        }
        id
    }

    /// Replace a vertex's cyclic order (planar embedding input).
    pub fn set_cyclic_order(
        &mut self,
        v: VertexId,
        order: Vec<EdgeId>,
    ) -> Result<(), NetworkError> {
        let mut expected = self.vertices[v].incident.clone();
        let mut given = order.clone();
        expected.sort_unstable();
        given.sort_unstable();
        if expected != given {
            return Err(NetworkError::BadCyclicOrder { vertex: v });
        }
        self.vertices[v].incident = order;
        Ok(())
    }

    /// Pin a boundary edge to a color.
    pub fn fix_edge_color(&mut self, e: EdgeId, color: Color) -> Result<(), NetworkError> {
        if color as usize >= self.colors {
            return Err(NetworkError::BadColor {
                color,
                colors: self.colors,
            });
        }
        self.fixed[e] = Some(color);
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn vertex_weight(&self, v: &Vertex, coloring: &[Color]) -> Result<CRat, NetworkError> {
        match &v.weight {
            VertexWeight::One => Ok(CRat::one()),
            VertexWeight::Const(c) => Ok(c.clone()),
            VertexWeight::Matrix(m) => {
                if v.incident.len() != 2 {
                    return Err(NetworkError::NotChainVertex {
                        vertex: 0,
                        degree: v.incident.len(),
                    });
                }
                let r = coloring[v.incident[0]] as usize;
                let c = coloring[v.incident[1]] as usize;
                Ok(m[(r, c)].clone())
            }
            VertexWeight::PenroseEpsilon => {
                if v.incident.len() != 3 {
                    return Err(NetworkError::NotTrivalent {
                        vertex: 0,
                        degree: v.incident.len(),
                    });
                }
                let a = coloring[v.incident[0]];
                let b = coloring[v.incident[1]];
                let c = coloring[v.incident[2]];
                Ok(match epsilon_sign(a, b, c) {
                    0 => CRat::zero(),
                    1 => crat_i(1, 1),
                    _ => crat_i(-1, 1),
                })
            }
        }
    }

    /// `Z(N)`: sum over colorings of free edges of the product of
    /// vertex weights. `cap` bounds the number of colorings visited.
    pub fn partition_function(&self, cap: u64) -> Result<CRat, NetworkError> {
        let free: Vec<EdgeId> = (0..self.edges.len())
            .filter(|&e| self.fixed[e].is_none())
            .collect();
        let total = (self.colors as u128)
            .checked_pow(free.len() as u32)
            .unwrap_or(u128::MAX);
        if total > cap as u128 {
            return Err(NetworkError::EnumerationCap {
                colorings: total,
                cap,
            });
        }
        let mut coloring: Vec<Color> = self
            .fixed
            .iter()
            .map(|f| f.unwrap_or(0))
            .collect();
        let mut z = CRat::zero();
        let mut counter = vec![0usize; free.len()];
        loop {
            let mut product = CRat::one();
            for v in &self.vertices {
                let w = self.vertex_weight(v, &coloring)?;
                if w.is_zero() {
                    product = CRat::zero();
                    break;
                }
                product *= w;
            }
            z += product;

            // odometer over free edges
            let mut i = 0;
            loop {
                if i == free.len() {
                    return Ok(z);
                }
                counter[i] += 1;
                if counter[i] < self.colors {
                    coloring[free[i]] = counter[i] as Color;
                    break;
                }
                counter[i] = 0;
                coloring[free[i]] = 0;
                i += 1;
            }
        }
    }

    /// Brute-force count of proper 3-edge-colorings: every vertex sees
    /// three distinct colors. The independent side of the Penrose
    /// check.
    pub fn proper_three_colorings(&self, cap: u64) -> Result<u64, NetworkError> {
        if self.colors != 3 {
            return Err(NetworkError::NeedThreeColors {
                colors: self.colors,
            });
        }
        for (id, v) in self.vertices.iter().enumerate() {
            if v.incident.len() != 3 {
                return Err(NetworkError::NotTrivalent {
                    vertex: id,
                    degree: v.incident.len(),
                });
            }
        }
        let total = 3u128.checked_pow(self.edges.len() as u32).unwrap_or(u128::MAX);
        if total > cap as u128 {
            return Err(NetworkError::EnumerationCap {
                colorings: total,
                cap,
            });
        }
        let n = self.edges.len();
        let mut coloring = vec![0u8; n];
        let mut count = 0u64;
        loop {
            let proper = self.vertices.iter().all(|v| {
                let a = coloring[v.incident[0]];
                let b = coloring[v.incident[1]];
                let c = coloring[v.incident[2]];
                a != b && b != c && a != c
            });
            if proper {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(count);
                }
                coloring[i] += 1;
                if coloring[i] < 3 {
                    break;
                }
                coloring[i] = 0;
                i += 1;
            }
        }
    }
}

impl Network {
    /// Load a network from the adjacency text format. Directives, one
    /// per line (`#` comments):
    ///
    /// ```text
    /// colors 3
    /// vertex u penrose        # weights: one | penrose | const <rat>
    /// vertex v penrose
    /// edge e0 u v
    /// edge e1 u v
    /// edge e2 u v
    /// order u e0 e1 e2        # cyclic order of incident edges
    /// order v e0 e2 e1
    /// fix e0 0                # optional boundary color
    /// ```
    pub fn from_text(src: &str) -> Result<Network, NetworkError> {
        use std::collections::HashMap;
        let bad = |message: String| NetworkError::Format { message };
        let mut colors = None;
        let mut net: Option<Network> = None;
        let mut vertex_ids: HashMap<String, VertexId> = HashMap::new();
        let mut edge_ids: HashMap<String, EdgeId> = HashMap::new();
        for (lineno, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let directive = words.next().unwrap();
            let context = |msg: &str| bad(format!("line {}: {msg}", lineno + 1));
            match directive {
                "colors" => {
                    let n: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| context("colors needs a positive integer"))?;
                    if n == 0 {
                        return Err(context("colors must be >= 1"));
                    }
                    colors = Some(n);
                    net = Some(Network::new(n));
                }
                "vertex" => {
                    let net = net.as_mut().ok_or_else(|| context("colors must come first"))?;
                    let name = words.next().ok_or_else(|| context("vertex needs a name"))?;
                    let weight = match words.next().unwrap_or("one") {
                        "one" => VertexWeight::One,
                        "penrose" => VertexWeight::PenroseEpsilon,
                        "const" => {
                            let value = words
                                .next()
                                .ok_or_else(|| context("const needs a value"))?;
                            VertexWeight::Const(parse_rational(value).ok_or_else(|| {
                                context("const value must be an integer or n/d")
                            })?)
                        }
                        other => return Err(context(&format!("unknown weight '{other}'"))),
                    };
                    vertex_ids.insert(name.to_string(), net.add_vertex(weight));
                }
                "edge" => {
                    let net = net.as_mut().ok_or_else(|| context("colors must come first"))?;
                    let name = words.next().ok_or_else(|| context("edge needs a name"))?;
                    let a = words
                        .next()
                        .and_then(|w| vertex_ids.get(w))
                        .ok_or_else(|| context("edge endpoint not declared"))?;
                    let b = words
                        .next()
                        .and_then(|w| vertex_ids.get(w))
                        .ok_or_else(|| context("edge endpoint not declared"))?;
                    edge_ids.insert(name.to_string(), net.add_edge(*a, *b));
                }
                "order" => {
                    let net = net.as_mut().ok_or_else(|| context("colors must come first"))?;
                    let v = words
                        .next()
                        .and_then(|w| vertex_ids.get(w))
                        .copied()
                        .ok_or_else(|| context("order needs a declared vertex"))?;
                    let order: Option<Vec<EdgeId>> =
                        words.map(|w| edge_ids.get(w).copied()).collect();
                    let order = order.ok_or_else(|| context("order lists an unknown edge"))?;
                    net.set_cyclic_order(v, order)?;
                }
                "fix" => {
                    let net = net.as_mut().ok_or_else(|| context("colors must come first"))?;
                    let e = words
                        .next()
                        .and_then(|w| edge_ids.get(w))
                        .copied()
                        .ok_or_else(|| context("fix needs a declared edge"))?;
                    let color: Color = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| context("fix needs a color index"))?;
                    net.fix_edge_color(e, color)?;
                }
                other => return Err(context(&format!("unknown directive '{other}'"))),
            }
        }
        let _ = colors;
        net.ok_or_else(|| bad("empty network description".into()))
    }
}

fn parse_rational(text: &str) -> Option<CRat> {
    if let Some((n, d)) = text.split_once('/') {
        let n: i64 = n.parse().ok()?;
        let d: i64 = d.parse().ok()?;
        if d == 0 {
            return None;
        }
        Some(crat(n, d))
    } else {
        text.parse::<i64>().ok().map(|n| crat(n, 1))
    }
}

/// Sign of `(a, b, c)` as a permutation of `(0, 1, 2)`: 0 on repeats.
fn epsilon_sign(a: Color, b: Color, c: Color) -> i8 {
    if a == b || b == c || a == c {
        return 0;
    }
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        _ => -1,
    }
}

/// Result of the Penrose evaluation next to its coloring-count oracle.
#[derive(Clone, Debug)]
pub struct PenroseReport {
    pub partition_value: CRat,
    pub proper_colorings: u64,
    pub agrees: bool,
}

/// Evaluate `Z` with vertex weight `i epsilon_abc` on a cubic planar
/// network and compare against the brute-force proper-coloring count.
pub fn penrose_count(network: &Network, cap: u64) -> Result<PenroseReport, NetworkError> {
    if network.colors != 3 {
        return Err(NetworkError::NeedThreeColors {
            colors: network.colors,
        });
    }
    let partition_value = network.partition_function(cap)?;
    let proper_colorings = network.proper_three_colorings(cap)?;
    let agrees = partition_value == crat(proper_colorings as i64, 1);
    Ok(PenroseReport {
        partition_value,
        proper_colorings,
        agrees,
    })
}

/// Cubic planar test networks with their plane cyclic orders.
pub mod gallery {
    use super::*;

    fn penrose_vertices(net: &mut Network, n: usize) -> Vec<VertexId> {
        (0..n)
            .map(|_| net.add_vertex(VertexWeight::PenroseEpsilon))
            .collect()
    }

    /// Two vertices joined by three parallel edges. 6 proper colorings.
    pub fn theta() -> Network {
        let mut net = Network::new(3);
        let v = penrose_vertices(&mut net, 2);
        let e0 = net.add_edge(v[0], v[1]);
        let e1 = net.add_edge(v[0], v[1]);
        let e2 = net.add_edge(v[0], v[1]);
        // opposite orientations of the two faces of the plane drawing
        net.set_cyclic_order(v[0], vec![e0, e1, e2]).unwrap();
        net.set_cyclic_order(v[1], vec![e0, e2, e1]).unwrap();
        net
    }

    /// Complete graph on four vertices, center-in-triangle embedding.
    pub fn k4() -> Network {
        let mut net = Network::new(3);
        let v = penrose_vertices(&mut net, 4);
        let e01 = net.add_edge(v[0], v[1]);
        let e02 = net.add_edge(v[0], v[2]);
        let e03 = net.add_edge(v[0], v[3]);
        let e12 = net.add_edge(v[1], v[2]);
        let e13 = net.add_edge(v[1], v[3]);
        let e23 = net.add_edge(v[2], v[3]);
        net.set_cyclic_order(v[0], vec![e01, e02, e03]).unwrap();
        net.set_cyclic_order(v[1], vec![e12, e01, e13]).unwrap();
        net.set_cyclic_order(v[2], vec![e23, e02, e12]).unwrap();
        net.set_cyclic_order(v[3], vec![e13, e03, e23]).unwrap();
        net
    }

    /// Triangular prism, nested-triangles embedding.
    pub fn prism() -> Network {
        let mut net = Network::new(3);
        let v = penrose_vertices(&mut net, 6);
        let t01 = net.add_edge(v[0], v[1]);
        let t12 = net.add_edge(v[1], v[2]);
        let t20 = net.add_edge(v[2], v[0]);
        let b34 = net.add_edge(v[3], v[4]);
        let b45 = net.add_edge(v[4], v[5]);
        let b53 = net.add_edge(v[5], v[3]);
        let s03 = net.add_edge(v[0], v[3]);
        let s14 = net.add_edge(v[1], v[4]);
        let s25 = net.add_edge(v[2], v[5]);
        net.set_cyclic_order(v[0], vec![t01, s03, t20]).unwrap();
        net.set_cyclic_order(v[1], vec![t12, s14, t01]).unwrap();
        net.set_cyclic_order(v[2], vec![t20, s25, t12]).unwrap();
        net.set_cyclic_order(v[3], vec![s03, b34, b53]).unwrap();
        net.set_cyclic_order(v[4], vec![b45, b34, s14]).unwrap();
        net.set_cyclic_order(v[5], vec![b53, b45, s25]).unwrap();
        net
    }

    /// The 3-cube, nested-squares embedding.
    pub fn cube() -> Network {
        let mut net = Network::new(3);
        let v = penrose_vertices(&mut net, 8);
        let o01 = net.add_edge(v[0], v[1]);
        let o12 = net.add_edge(v[1], v[2]);
        let o23 = net.add_edge(v[2], v[3]);
        let o30 = net.add_edge(v[3], v[0]);
        let i45 = net.add_edge(v[4], v[5]);
        let i56 = net.add_edge(v[5], v[6]);
        let i67 = net.add_edge(v[6], v[7]);
        let i74 = net.add_edge(v[7], v[4]);
        let s04 = net.add_edge(v[0], v[4]);
        let s15 = net.add_edge(v[1], v[5]);
        let s26 = net.add_edge(v[2], v[6]);
        let s37 = net.add_edge(v[3], v[7]);
        net.set_cyclic_order(v[0], vec![o01, o30, s04]).unwrap();
        net.set_cyclic_order(v[1], vec![o01, s15, o12]).unwrap();
        net.set_cyclic_order(v[2], vec![o12, s26, o23]).unwrap();
        net.set_cyclic_order(v[3], vec![o23, s37, o30]).unwrap();
        net.set_cyclic_order(v[4], vec![i45, s04, i74]).unwrap();
        net.set_cyclic_order(v[5], vec![s15, i45, i56]).unwrap();
        net.set_cyclic_order(v[6], vec![i56, i67, s26]).unwrap();
        net.set_cyclic_order(v[7], vec![i67, i74, s37]).unwrap();
        net
    }

    /// Two doubled-edge triangles joined by a bridge: cubic with a
    /// bridge, so no proper 3-edge-coloring survives.
    pub fn bridged() -> Network {
        let mut net = Network::new(3);
        let v = penrose_vertices(&mut net, 6);
        // lobe A: u1 = v0, u2 = v1, u3 = v2
        let a1 = net.add_edge(v[0], v[1]);
        let a2 = net.add_edge(v[0], v[1]);
        let a3 = net.add_edge(v[1], v[2]);
        let a4 = net.add_edge(v[2], v[0]);
        // lobe B: v1 = v3, v2 = v4, v3-of-lobe = v5
        let b1 = net.add_edge(v[3], v[4]);
        let b2 = net.add_edge(v[3], v[4]);
        let b3 = net.add_edge(v[4], v[5]);
        let b4 = net.add_edge(v[5], v[3]);
        let bridge = net.add_edge(v[2], v[5]);
        net.set_cyclic_order(v[0], vec![a1, a2, a4]).unwrap();
        net.set_cyclic_order(v[1], vec![a2, a1, a3]).unwrap();
        net.set_cyclic_order(v[2], vec![a3, bridge, a4]).unwrap();
        net.set_cyclic_order(v[3], vec![b1, b2, b4]).unwrap();
        net.set_cyclic_order(v[4], vec![b2, b1, b3]).unwrap();
        net.set_cyclic_order(v[5], vec![b3, bridge, b4]).unwrap();
        net
    }
}
