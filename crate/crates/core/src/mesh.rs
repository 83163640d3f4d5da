//! Regular 2D/3D meshes and the sparsity parameter `d` of the edge-based
//! FEM system matrix.
//!
//! Each edge of the mesh carries one scalar degree of freedom, so matrix
//! row `i` has a nonzero in column `j` exactly when edges `i` and `j`
//! share at least one cell. The sparsity parameter follows from the
//! two-step counting procedure:
//!
//! 1. for each edge `i`, count the edges (including `i` itself) that share
//!    at least one cell with it;
//! 2. take the maximum of this count over all edges.
//!
//! Boundary edges participate in the maximum; for `m ≥ 3` they never
//! attain it, which is why square-mesh boundary rows show 4 nonzeros
//! against the interior's 7.
//!
//! The quantity is purely combinatorial: vertices carry integer lattice
//! coordinates and no geometric lengths enter anywhere. Five regular
//! topologies are built:
//!
//! * squares and uniformly-oriented right triangles on an `m × m` vertex
//!   grid (`d = 7` and `d = 5` for `m ≥ 3`);
//! * cubes on an `m × m × m` grid (`d = 33`);
//! * two tetrahedral subdivisions of the cubic mesh — six tetrahedra
//!   around each cube's main diagonal, or five per cube in the
//!   parity-alternating corner scheme. No published value exists for
//!   their `d`; it is computed output, stability-checked across `m`.
//!
//! Counting is single-threaded; it could be parallelized over edges
//! against the immutable mesh, but determinism of the result is the
//! contract either way.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The regular mesh families whose sparsity the analysis compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TopologyKind {
    /// Unit squares on an `m × m` vertex grid.
    #[serde(rename = "square2d")]
    Square2D,
    /// The square grid with one uniformly-oriented diagonal per square,
    /// giving two right triangles per square.
    #[serde(rename = "triangular2d")]
    Triangular2D,
    /// Unit cubes on an `m × m × m` vertex grid.
    #[serde(rename = "cubic3d")]
    Cubic3D,
    /// Each cube split into six tetrahedra sharing its main diagonal.
    #[serde(rename = "tet-six-per-cube3d")]
    TetSixPerCube3D,
    /// Each cube split into five tetrahedra (four corner tetrahedra and a
    /// central one), orientation alternating with cube parity.
    #[serde(rename = "tet-five-per-cube3d")]
    TetFivePerCube3D,
}

impl TopologyKind {
    /// All kinds, in a fixed documentation order.
    pub const ALL: [TopologyKind; 5] = [
        TopologyKind::Square2D,
        TopologyKind::Triangular2D,
        TopologyKind::Cubic3D,
        TopologyKind::TetSixPerCube3D,
        TopologyKind::TetFivePerCube3D,
    ];

    fn token(self) -> &'static str {
        match self {
            TopologyKind::Square2D => "square2d",
            TopologyKind::Triangular2D => "triangular2d",
            TopologyKind::Cubic3D => "cubic3d",
            TopologyKind::TetSixPerCube3D => "tet-six-per-cube3d",
            TopologyKind::TetFivePerCube3D => "tet-five-per-cube3d",
        }
    }
}

impl fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for TopologyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TopologyKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| {
                Error::invalid(
                    "topology",
                    format!(
                        "unknown topology `{s}`; expected one of {}",
                        TopologyKind::ALL.map(|k| k.token()).join(", ")
                    ),
                )
            })
    }
}

/// A mesh family together with its resolution `m` (vertices per side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshTopology {
    /// Which regular family to build.
    pub kind: TopologyKind,
    /// Vertices per side; must be at least 2 to have any cells.
    pub m: usize,
}

/// An edge-indexed mesh: integer lattice vertices, vertex-pair edges
/// (smaller index first), and cells given as edge-index lists.
///
/// 2D meshes keep the third coordinate at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mesh {
    /// Lattice coordinates of each vertex.
    pub vertices: Vec<[i64; 3]>,
    /// Vertex-index pairs, each stored `[smaller, larger]`, no duplicates.
    pub edges: Vec<[u32; 2]>,
    /// One finite element per entry: the edge indices of a square (4),
    /// triangle (3), cube (12), or tetrahedron (6).
    pub cells: Vec<Vec<u32>>,
}

const ELEMENT_EDGE_COUNTS: [usize; 4] = [3, 4, 6, 12];

impl Mesh {
    /// Checks the structural invariants: edge vertex indices valid and
    /// distinct, edge pairs ordered and unique, cell edge indices valid,
    /// and each cell sized like a supported element type.
    pub fn validate(&self) -> Result<()> {
        let nv = self.vertices.len() as u32;
        let mut seen = HashSet::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            if e[0] >= e[1] {
                return Err(Error::DegenerateMesh {
                    message: format!("edge {i} is not an ordered pair of distinct vertices: {e:?}"),
                });
            }
            if e[1] >= nv {
                return Err(Error::DegenerateMesh {
                    message: format!("edge {i} references vertex {} of {nv}", e[1]),
                });
            }
            if !seen.insert(*e) {
                return Err(Error::DegenerateMesh {
                    message: format!("duplicate edge {e:?}"),
                });
            }
        }
        let ne = self.edges.len() as u32;
        for (k, cell) in self.cells.iter().enumerate() {
            if !ELEMENT_EDGE_COUNTS.contains(&cell.len()) {
                return Err(Error::DegenerateMesh {
                    message: format!(
                        "cell {k} has {} edges; supported elements have {ELEMENT_EDGE_COUNTS:?}",
                        cell.len()
                    ),
                });
            }
            if let Some(&bad) = cell.iter().find(|&&e| e >= ne) {
                return Err(Error::DegenerateMesh {
                    message: format!("cell {k} references edge {bad} of {ne}"),
                });
            }
        }
        Ok(())
    }

    /// Plain-text dump for external verification: one line per cell,
    /// listing the cell's edge ids separated by spaces.
    #[must_use]
    pub fn adjacency_dump(&self) -> String {
        let mut out = String::new();
        for cell in &self.cells {
            let line: Vec<String> = cell.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The two-step counting result: the sparsity parameter `d` plus the full
/// per-edge count histogram it was the maximum of.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityReport {
    /// Maximum per-edge count: the sparsity parameter.
    pub d: usize,
    /// Histogram mapping a per-edge count to how many edges attain it.
    pub per_edge_counts: BTreeMap<usize, u64>,
    /// Smallest count observed; attained on boundary edges.
    pub boundary_min: usize,
}

/// Per-row nonzero statistics of the symbolic system matrix: the same
/// histogram as [`SparsityReport`], plus the total pattern size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonzeroPattern {
    /// Histogram mapping a row's nonzero count to how many rows attain it.
    pub per_row_counts: BTreeMap<usize, u64>,
    /// Total number of nonzero entries in the pattern.
    pub total_nonzeros: u64,
}

// ── construction ────────────────────────────────────────────────────────

struct MeshBuilder {
    vertices: Vec<[i64; 3]>,
    edges: Vec<[u32; 2]>,
    edge_ids: HashMap<[u32; 2], u32>,
    cells: Vec<Vec<u32>>,
}

impl MeshBuilder {
    fn new() -> Self {
        MeshBuilder {
            vertices: Vec::new(),
            edges: Vec::new(),
            edge_ids: HashMap::new(),
            cells: Vec::new(),
        }
    }

    /// Returns the id of the edge `{a, b}`, creating it on first use.
    /// Creation order (not the map) defines edge ids, keeping builds
    /// deterministic.
    fn edge(&mut self, a: u32, b: u32) -> u32 {
        debug_assert_ne!(a, b);
        let key = if a < b { [a, b] } else { [b, a] };
        if let Some(&id) = self.edge_ids.get(&key) {
            return id;
        }
        let id = self.edges.len() as u32;
        self.edges.push(key);
        self.edge_ids.insert(key, id);
        id
    }

    fn tet(&mut self, v: [u32; 4]) {
        let cell = vec![
            self.edge(v[0], v[1]),
            self.edge(v[0], v[2]),
            self.edge(v[0], v[3]),
            self.edge(v[1], v[2]),
            self.edge(v[1], v[3]),
            self.edge(v[2], v[3]),
        ];
        self.cells.push(cell);
    }

    fn finish(self) -> Mesh {
        Mesh {
            vertices: self.vertices,
            edges: self.edges,
            cells: self.cells,
        }
    }
}

/// Builds a rectangular grid of unit squares with `nx × ny` vertices.
fn square_grid(nx: usize, ny: usize) -> MeshBuilder {
    let mut b = MeshBuilder::new();
    let vid = |x: usize, y: usize| (y * nx + x) as u32;
    for y in 0..ny {
        for x in 0..nx {
            b.vertices.push([x as i64, y as i64, 0]);
        }
    }
    for y in 0..ny {
        for x in 0..nx {
            if x + 1 < nx {
                b.edge(vid(x, y), vid(x + 1, y));
            }
            if y + 1 < ny {
                b.edge(vid(x, y), vid(x, y + 1));
            }
        }
    }
    for y in 0..ny.saturating_sub(1) {
        for x in 0..nx.saturating_sub(1) {
            let cell = vec![
                b.edge(vid(x, y), vid(x + 1, y)),         // bottom
                b.edge(vid(x + 1, y), vid(x + 1, y + 1)), // right
                b.edge(vid(x, y + 1), vid(x + 1, y + 1)), // top
                b.edge(vid(x, y), vid(x, y + 1)),         // left
            ];
            b.cells.push(cell);
        }
    }
    b
}

/// Builds an isolated horizontal strip of `squares` unit squares (a
/// `(squares+1) × 2` vertex grid): the configuration behind the
/// 31-nonzero two-square example.
pub fn build_square_strip(squares: usize) -> Result<Mesh> {
    if squares == 0 {
        return Err(Error::invalid("squares", "strip needs at least one square"));
    }
    Ok(square_grid(squares + 1, 2).finish())
}

fn triangular_grid(m: usize) -> MeshBuilder {
    let mut b = square_grid(m, m);
    let vid = |x: usize, y: usize| (y * m + x) as u32;
    b.cells.clear();
    for y in 0..m - 1 {
        for x in 0..m - 1 {
            // Uniform diagonal orientation: (x, y) → (x+1, y+1).
            let diag = b.edge(vid(x, y), vid(x + 1, y + 1));
            let lower = vec![
                b.edge(vid(x, y), vid(x + 1, y)),
                b.edge(vid(x + 1, y), vid(x + 1, y + 1)),
                diag,
            ];
            b.cells.push(lower);
            let upper = vec![
                diag,
                b.edge(vid(x, y + 1), vid(x + 1, y + 1)),
                b.edge(vid(x, y), vid(x, y + 1)),
            ];
            b.cells.push(upper);
        }
    }
    b
}

fn cubic_vertices(m: usize) -> MeshBuilder {
    let mut b = MeshBuilder::new();
    for z in 0..m {
        for y in 0..m {
            for x in 0..m {
                b.vertices.push([x as i64, y as i64, z as i64]);
            }
        }
    }
    b
}

fn vid3(m: usize, p: [usize; 3]) -> u32 {
    ((p[2] * m + p[1]) * m + p[0]) as u32
}

/// Adds the 12 lattice edges of the unit cube at `c` and returns their ids.
fn cube_edges(b: &mut MeshBuilder, m: usize, c: [usize; 3]) -> Vec<u32> {
    let [x, y, z] = c;
    let mut ids = Vec::with_capacity(12);
    for dy in 0..2 {
        for dz in 0..2 {
            ids.push(b.edge(
                vid3(m, [x, y + dy, z + dz]),
                vid3(m, [x + 1, y + dy, z + dz]),
            ));
        }
    }
    for dx in 0..2 {
        for dz in 0..2 {
            ids.push(b.edge(
                vid3(m, [x + dx, y, z + dz]),
                vid3(m, [x + dx, y + 1, z + dz]),
            ));
        }
    }
    for dx in 0..2 {
        for dy in 0..2 {
            ids.push(b.edge(
                vid3(m, [x + dx, y + dy, z]),
                vid3(m, [x + dx, y + dy, z + 1]),
            ));
        }
    }
    ids
}

fn for_each_cube(m: usize, mut f: impl FnMut([usize; 3])) {
    for z in 0..m - 1 {
        for y in 0..m - 1 {
            for x in 0..m - 1 {
                f([x, y, z]);
            }
        }
    }
}

fn cubic_grid(m: usize) -> MeshBuilder {
    let mut b = cubic_vertices(m);
    for_each_cube(m, |c| {
        let ids = cube_edges(&mut b, m, c);
        b.cells.push(ids);
    });
    b
}

fn corner(m: usize, c: [usize; 3], offset: [usize; 3]) -> u32 {
    vid3(m, [c[0] + offset[0], c[1] + offset[1], c[2] + offset[2]])
}

/// Six tetrahedra per cube, all sharing the main diagonal from the cube's
/// (0,0,0) corner to its (1,1,1) corner. One tetrahedron per ordered axis
/// pair (a, b): corner → +e_a → +e_a+e_b → opposite corner. Face
/// diagonals always run from a face's minimal corner to its maximal one,
/// so neighboring cubes agree on shared faces by translation invariance.
fn tet_six_grid(m: usize) -> MeshBuilder {
    let mut b = cubic_vertices(m);
    const AXIS_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    for_each_cube(m, |c| {
        let p0 = corner(m, c, [0, 0, 0]);
        let p3 = corner(m, c, [1, 1, 1]);
        for (a, axis_b) in AXIS_PAIRS {
            let mut o1 = [0, 0, 0];
            o1[a] = 1;
            let mut o2 = o1;
            o2[axis_b] = 1;
            b.tet([p0, corner(m, c, o1), corner(m, c, o2), p3]);
        }
    });
    b
}

/// Five tetrahedra per cube: a central tetrahedron on the four corners of
/// even absolute coordinate parity, plus one corner tetrahedron at each
/// odd-parity corner with its three edge-neighbors. Every face diagonal
/// thereby connects the face's two even-parity corners — a face-local
/// rule, so adjacent cubes (whose orientations alternate with cube
/// parity) agree on shared faces automatically.
fn tet_five_grid(m: usize) -> MeshBuilder {
    let mut b = cubic_vertices(m);
    const OFFSETS: [[usize; 3]; 8] = [
        [0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0],
        [0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1],
    ];
    for_each_cube(m, |c| {
        let parity = |o: [usize; 3]| (c[0] + c[1] + c[2] + o[0] + o[1] + o[2]) % 2;
        let mut even = Vec::with_capacity(4);
        let mut odd = Vec::with_capacity(4);
        for o in OFFSETS {
            if parity(o) == 0 {
                even.push(o);
            } else {
                odd.push(o);
            }
        }
        b.tet([
            corner(m, c, even[0]),
            corner(m, c, even[1]),
            corner(m, c, even[2]),
            corner(m, c, even[3]),
        ]);
        for o in odd {
            let flip = |axis: usize| {
                let mut f = o;
                f[axis] ^= 1;
                corner(m, c, f)
            };
            b.tet([corner(m, c, o), flip(0), flip(1), flip(2)]);
        }
    });
    b
}

/// Builds the requested mesh. Fails for `m < 2` (no cells would exist).
pub fn build_mesh(t: MeshTopology) -> Result<Mesh> {
    if t.m < 2 {
        return Err(Error::MeshTooSmall { m: t.m });
    }
    let builder = match t.kind {
        TopologyKind::Square2D => square_grid(t.m, t.m),
        TopologyKind::Triangular2D => triangular_grid(t.m),
        TopologyKind::Cubic3D => cubic_grid(t.m),
        TopologyKind::TetSixPerCube3D => tet_six_grid(t.m),
        TopologyKind::TetFivePerCube3D => tet_five_grid(t.m),
    };
    Ok(builder.finish())
}

/// Closed-form edge count for each topology, exact for all `m` and
/// matching [`build_mesh`]'s enumeration. Degenerate sizes (`m < 2`)
/// correctly yield 0 without error.
#[must_use]
pub fn edge_count(t: MeshTopology) -> u64 {
    let m = t.m as u64;
    let k = m.saturating_sub(1); // cells per side
    let grid2d = 2 * m * k;
    let grid3d = 3 * m * m * k;
    match t.kind {
        TopologyKind::Square2D => grid2d,
        TopologyKind::Triangular2D => grid2d + k * k,
        TopologyKind::Cubic3D => grid3d,
        TopologyKind::TetSixPerCube3D => grid3d + 3 * m * k * k + k * k * k,
        TopologyKind::TetFivePerCube3D => grid3d + 3 * m * k * k,
    }
}

// ── counting ────────────────────────────────────────────────────────────

/// Shared core of the two counting entry points: for every edge, the size
/// of the set of edges sharing at least one cell with it (itself
/// included), returned as a count histogram.
fn per_edge_count_histogram(mesh: &Mesh) -> Result<BTreeMap<usize, u64>> {
    mesh.validate()?;
    if mesh.cells.is_empty() {
        return Err(Error::DegenerateMesh {
            message: "mesh has no cells; per-edge counts are undefined".into(),
        });
    }
    let ne = mesh.edges.len();
    let mut cells_of_edge: Vec<Vec<u32>> = vec![Vec::new(); ne];
    for (k, cell) in mesh.cells.iter().enumerate() {
        for &e in cell {
            cells_of_edge[e as usize].push(k as u32);
        }
    }
    let mut histogram = BTreeMap::new();
    let mut stamp = vec![u32::MAX; ne];
    for i in 0..ne {
        stamp[i] = i as u32;
        let mut count = 1usize; // the edge itself
        for &k in &cells_of_edge[i] {
            for &e in &mesh.cells[k as usize] {
                if stamp[e as usize] != i as u32 {
                    stamp[e as usize] = i as u32;
                    count += 1;
                }
            }
        }
        *histogram.entry(count).or_insert(0) += 1;
    }
    Ok(histogram)
}

/// Runs the two-step counting procedure and reports the sparsity
/// parameter `d` (the maximum per-edge count, boundary edges included).
pub fn sparsity_parameter(mesh: &Mesh) -> Result<SparsityReport> {
    let per_edge_counts = per_edge_count_histogram(mesh)?;
    let d = *per_edge_counts.keys().next_back().expect("nonempty histogram");
    let boundary_min = *per_edge_counts.keys().next().expect("nonempty histogram");
    Ok(SparsityReport {
        d,
        per_edge_counts,
        boundary_min,
    })
}

/// Per-row nonzero statistics of the symbolic matrix pattern. The row
/// histogram is identical to the sparsity per-edge counts; the total is
/// the pattern's overall nonzero count.
pub fn row_nonzero_counts(mesh: &Mesh) -> Result<NonzeroPattern> {
    let per_row_counts = per_edge_count_histogram(mesh)?;
    let total_nonzeros = per_row_counts.iter().map(|(&c, &n)| c as u64 * n).sum();
    Ok(NonzeroPattern {
        per_row_counts,
        total_nonzeros,
    })
}
