//! Two-colored complete graphs with book-size measurement.
//!
//! Every pair of distinct vertices carries exactly one of two colors; red is
//! stored explicitly as packed bit rows and blue is its complement. Codegrees
//! (same-color common neighbor counts) reduce to AND + popcount over rows,
//! which keeps full book-size scans cheap at desk scale.
//!
//! Page convention used throughout: the book size of a color is the maximum
//! number of pages over bases of that color, so a coloring contains a red
//! book with base an edge and m pages exactly when `book_size(Red).pages >= m`.

use std::fmt;

use thiserror::Error;

// ===== Colors =====

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    #[inline]
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

impl std::str::FromStr for Color {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, GraphError> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            _ => Err(GraphError::BadColorName(s.to_string())),
        }
    }
}

// ===== Errors =====

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("vertex pair ({0},{0}) is not an edge")]
    SelfPair(usize),
    #[error("book order {0} unsupported, expected 2..=4")]
    BadBookOrder(usize),
    #[error("unknown color name {0:?}")]
    BadColorName(String),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex sets overlap at {0}")]
    OverlappingSets(usize),
    #[error("duplicate vertex {0} in set")]
    DuplicateVertex(usize),
    #[error("witness string is missing the ':' separator")]
    WitnessMissingSeparator,
    #[error("witness string has a bad vertex count field")]
    WitnessBadCount,
    #[error("witness hex length {got} does not match {expected} for the vertex count")]
    WitnessBadLength { expected: usize, got: usize },
    #[error("witness hex contains non-hex character {0:?}")]
    WitnessBadChar(char),
    #[error("witness padding bits must be zero")]
    WitnessBadPadding,
}

// ===== Measurements =====

/// Largest book of one color: a base clique of `order` vertices in the color
/// together with `pages` vertices joined to every base vertex in the color.
///
/// When the graph has no clique of the base order in the color there is no
/// base to measure from; `base` is `None` and `pages` is 0 by convention.
/// Downstream records must preserve that marker rather than flattening it
/// into a bare zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookMeasurement {
    pub color: Color,
    pub order: usize,
    pub base: Option<Vec<usize>>,
    pub pages: usize,
}

impl BookMeasurement {
    pub fn has_base(&self) -> bool {
        self.base.is_some()
    }
}

/// Red/blue split of the pairs between two disjoint vertex sets.
///
/// The measured color's density is the exact quotient count/total and the
/// other is its complement `1.0 - that`, so the two always sum to exactly 1;
/// the exact counts are carried alongside.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub x_size: usize,
    pub y_size: usize,
    pub red_pairs: usize,
    pub blue_pairs: usize,
    pub red_density: f64,
    pub blue_density: f64,
}

impl DensityReport {
    pub fn density(&self, color: Color) -> f64 {
        match color {
            Color::Red => self.red_density,
            Color::Blue => self.blue_density,
        }
    }
}

// ===== Graph =====

/// Complete graph on vertices `0..n` with every edge colored red or blue.
///
/// Row u stores the red neighbors of u as bits; the diagonal bit is never
/// set. Blue adjacency is derived by complementing within the row mask.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredCompleteGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for ColoredCompleteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredCompleteGraph(n={}, red_edges={})", self.n, self.edge_count(Color::Red))
    }
}

#[inline]
fn word_of(v: usize) -> usize {
    v >> 6
}

#[inline]
fn bit_of(v: usize) -> u64 {
    1u64 << (v & 63)
}

impl ColoredCompleteGraph {
    /// All-blue coloring on n vertices. n must be positive.
    pub fn new_all_blue(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let words = n.div_ceil(64);
        Ok(ColoredCompleteGraph { n, words, rows: vec![0u64; n * words] })
    }

    /// Coloring with exactly the listed pairs red. Pairs may repeat and may be
    /// given in either order; loops and out-of-range vertices are rejected.
    pub fn from_red_relation<I>(n: usize, red_pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new_all_blue(n)?;
        for (u, v) in red_pairs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfPair(u));
            }
            g.set_red(u, v, true);
        }
        Ok(g)
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Bits of the final row word that correspond to real vertices.
    #[inline]
    fn tail_mask(&self, w: usize) -> u64 {
        if w + 1 < self.words || self.n & 63 == 0 {
            !0u64
        } else {
            (1u64 << (self.n & 63)) - 1
        }
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    /// Word w of u's adjacency row in the given color, diagonal cleared.
    #[inline]
    fn color_word(&self, u: usize, w: usize, color: Color) -> u64 {
        let red = self.rows[u * self.words + w];
        let mut out = match color {
            Color::Red => red,
            Color::Blue => !red & self.tail_mask(w),
        };
        if color == Color::Blue && word_of(u) == w {
            out &= !bit_of(u);
        }
        out
    }

    /// True when edge (u,v) is red. The diagonal carries no edge; `is_red(u,u)`
    /// is false. Panics on out-of-range vertices.
    #[inline]
    pub fn is_red(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u * self.words + word_of(v)] & bit_of(v) != 0
    }

    /// Color of edge (u,v). Panics if u == v or out of range.
    #[inline]
    pub fn color_of(&self, u: usize, v: usize) -> Color {
        assert!(u != v, "vertex pair ({u},{u}) is not an edge");
        if self.is_red(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    /// Sets edge (u,v) red or blue. Panics if u == v or out of range.
    #[inline]
    pub fn set_red(&mut self, u: usize, v: usize, red: bool) {
        assert!(u != v, "vertex pair ({u},{u}) is not an edge");
        assert!(u < self.n && v < self.n, "vertex out of range");
        if red {
            self.rows[u * self.words + word_of(v)] |= bit_of(v);
            self.rows[v * self.words + word_of(u)] |= bit_of(u);
        } else {
            self.rows[u * self.words + word_of(v)] &= !bit_of(v);
            self.rows[v * self.words + word_of(u)] &= !bit_of(u);
        }
    }

    /// Swaps the color of edge (u,v).
    #[inline]
    pub fn flip(&mut self, u: usize, v: usize) {
        let now_red = !self.is_red(u, v);
        self.set_red(u, v, now_red);
    }

    pub fn degree(&self, v: usize, color: Color) -> usize {
        assert!(v < self.n, "vertex out of range");
        (0..self.words).map(|w| self.color_word(v, w, color).count_ones() as usize).sum()
    }

    pub fn edge_count(&self, color: Color) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v, color)).sum();
        total / 2
    }

    /// Edges of one color in row-major (u < v) order.
    pub fn edges(&self, color: Color) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| (self.color_of(u, v) == color).then_some((u, v)))
        })
    }

    /// Number of vertices joined to both u and v in the color. Errors when
    /// u == v or either vertex is out of range.
    pub fn codegree(&self, u: usize, v: usize, color: Color) -> Result<usize, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfPair(u));
        }
        let mut count = 0usize;
        for w in 0..self.words {
            count += (self.color_word(u, w, color) & self.color_word(v, w, color)).count_ones()
                as usize;
        }
        Ok(count)
    }

    /// Adjacency rows of one color, diagonal cleared, as a scratch bitmap.
    fn materialize(&self, color: Color) -> Vec<u64> {
        let mut out = vec![0u64; self.rows.len()];
        for u in 0..self.n {
            for w in 0..self.words {
                out[u * self.words + w] = self.color_word(u, w, color);
            }
        }
        out
    }

    /// Largest book with an edge base in the color. Ties break toward the
    /// row-major first base edge, so results are deterministic.
    pub fn book_size(&self, color: Color) -> BookMeasurement {
        self.book_size_k(color, 2).expect("order 2 is always valid")
    }

    /// Largest book whose base is a clique of `order` vertices in the color,
    /// for `order` in 2..=4. Pages count vertices joined to the whole base.
    pub fn book_size_k(&self, color: Color, order: usize) -> Result<BookMeasurement, GraphError> {
        if !(2..=4).contains(&order) {
            return Err(GraphError::BadBookOrder(order));
        }
        let rows = self.materialize(color);
        let words = self.words;
        let row = |u: usize| &rows[u * words..(u + 1) * words];

        fn consider(best: &mut Option<(Vec<usize>, usize)>, base: &[usize], pages: usize) {
            match best {
                Some((_, p)) if *p >= pages => {}
                _ => *best = Some((base.to_vec(), pages)),
            }
        }

        let mut best: Option<(Vec<usize>, usize)> = None;
        let mut uv = vec![0u64; words];
        let mut uvw = vec![0u64; words];
        for u in 0..self.n {
            for v in set_bits_above(row(u), u) {
                intersect_into(&mut uv, row(u), row(v));
                let pages2 = popcount(&uv);
                if order == 2 {
                    consider(&mut best, &[u, v], pages2);
                    continue;
                }
                // Extra base vertices come out of the pair's page set, so a
                // base through (u,v) can never beat pages2 - (order - 2);
                // skip when even that cannot improve on the best.
                if let Some((_, p)) = &best {
                    if pages2 < *p + order - 1 {
                        continue;
                    }
                }
                for w in set_bits_above(&uv, v) {
                    intersect_into(&mut uvw, &uv, row(w));
                    let pages3 = popcount(&uvw);
                    if order == 3 {
                        consider(&mut best, &[u, v, w], pages3);
                        continue;
                    }
                    for x in set_bits_above(&uvw, w) {
                        let pages4 = count_intersection(&uvw, row(x));
                        consider(&mut best, &[u, v, w, x], pages4);
                    }
                }
            }
        }

        Ok(match best {
            Some((base, pages)) => {
                BookMeasurement { color, order, base: Some(base), pages }
            }
            None => BookMeasurement { color, order, base: None, pages: 0 },
        })
    }

    /// Guaranteed independence floor ceil(n^2 / (n + 2m)) in the color (m =
    /// edge count), with a witness independent set found by greedy min-degree
    /// removal. The witness always reaches the floor.
    pub fn turan_independence_floor(&self, color: Color) -> (usize, Vec<usize>) {
        let m = self.edge_count(color);
        let floor = (self.n * self.n).div_ceil(self.n + 2 * m);

        let rows = self.materialize(color);
        let words = self.words;
        let mut alive = vec![0u64; words];
        for v in 0..self.n {
            alive[word_of(v)] |= bit_of(v);
        }
        let mut remaining = self.n;
        let mut witness = Vec::new();
        while remaining > 0 {
            let mut pick = usize::MAX;
            let mut pick_deg = usize::MAX;
            for v in set_bits(&alive) {
                let deg = count_intersection(&rows[v * words..(v + 1) * words], &alive);
                if deg < pick_deg {
                    pick = v;
                    pick_deg = deg;
                    if deg == 0 {
                        break;
                    }
                }
            }
            witness.push(pick);
            alive[word_of(pick)] &= !bit_of(pick);
            let killed = 1 + count_intersection(&rows[pick * words..(pick + 1) * words], &alive);
            for w in 0..words {
                alive[w] &= !rows[pick * words + w];
            }
            remaining -= killed;
        }
        witness.sort_unstable();
        (floor, witness)
    }

    /// Red/blue split of the cross pairs between disjoint nonempty sets. The
    /// named color's density is computed as an exact quotient; the other is
    /// reported as its complement.
    pub fn pair_density(
        &self,
        xs: &[usize],
        ys: &[usize],
        color: Color,
    ) -> Result<DensityReport, GraphError> {
        if xs.is_empty() || ys.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut seen_x = vec![false; self.n];
        for &x in xs {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange(x, self.n));
            }
            if seen_x[x] {
                return Err(GraphError::DuplicateVertex(x));
            }
            seen_x[x] = true;
        }
        let mut ymask = vec![0u64; self.words];
        let mut seen_y = vec![false; self.n];
        for &y in ys {
            if y >= self.n {
                return Err(GraphError::VertexOutOfRange(y, self.n));
            }
            if seen_y[y] {
                return Err(GraphError::DuplicateVertex(y));
            }
            if seen_x[y] {
                return Err(GraphError::OverlappingSets(y));
            }
            seen_y[y] = true;
            ymask[word_of(y)] |= bit_of(y);
        }
        let mut red_pairs = 0usize;
        for &x in xs {
            red_pairs += count_intersection(self.row(x), &ymask);
        }
        let total = xs.len() * ys.len();
        let blue_pairs = total - red_pairs;
        let (red_density, blue_density) = match color {
            Color::Red => {
                let r = red_pairs as f64 / total as f64;
                (r, 1.0 - r)
            }
            Color::Blue => {
                let b = blue_pairs as f64 / total as f64;
                (1.0 - b, b)
            }
        };
        Ok(DensityReport {
            x_size: xs.len(),
            y_size: ys.len(),
            red_pairs,
            blue_pairs,
            red_density,
            blue_density,
        })
    }

    /// The same graph with red and blue exchanged.
    pub fn color_swapped(&self) -> Self {
        let mut rows = vec![0u64; self.rows.len()];
        for u in 0..self.n {
            for w in 0..self.words {
                rows[u * self.words + w] = self.color_word(u, w, Color::Blue);
            }
        }
        ColoredCompleteGraph { n: self.n, words: self.words, rows }
    }

    // ===== Witness serialization =====

    /// Encodes the red relation as "N:hex". Bits run over pairs (u,v), u < v,
    /// in row-major order, packed most-significant-bit first into nibbles;
    /// trailing pad bits are zero. The encoding round-trips bit-exactly.
    pub fn to_witness_string(&self) -> String {
        let pairs = self.n * (self.n - 1) / 2;
        let mut hex = String::with_capacity(pairs.div_ceil(4));
        let mut nibble = 0u8;
        let mut filled = 0u8;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                nibble <<= 1;
                if self.is_red(u, v) {
                    nibble |= 1;
                }
                filled += 1;
                if filled == 4 {
                    hex.push(char::from_digit(nibble as u32, 16).unwrap());
                    nibble = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            nibble <<= 4 - filled;
            hex.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        format!("{}:{}", self.n, hex)
    }

    /// Parses the "N:hex" encoding produced by [`to_witness_string`]. The hex
    /// length must match the vertex count exactly and pad bits must be zero.
    ///
    /// [`to_witness_string`]: ColoredCompleteGraph::to_witness_string
    pub fn from_witness_string(s: &str) -> Result<Self, GraphError> {
        let (count, hex) = s.split_once(':').ok_or(GraphError::WitnessMissingSeparator)?;
        let n: usize = count.parse().map_err(|_| GraphError::WitnessBadCount)?;
        if n == 0 {
            return Err(GraphError::WitnessBadCount);
        }
        let pairs = n * (n - 1) / 2;
        let expected = pairs.div_ceil(4);
        if hex.len() != expected {
            return Err(GraphError::WitnessBadLength { expected, got: hex.len() });
        }
        let mut bits = Vec::with_capacity(expected * 4);
        for c in hex.chars() {
            let d = c.to_digit(16).ok_or(GraphError::WitnessBadChar(c))? as u8;
            for shift in (0..4).rev() {
                bits.push(d >> shift & 1 == 1);
            }
        }
        if bits[pairs..].iter().any(|&b| b) {
            return Err(GraphError::WitnessBadPadding);
        }
        let mut g = Self::new_all_blue(n)?;
        let mut i = 0usize;
        for u in 0..n {
            for v in (u + 1)..n {
                if bits[i] {
                    g.set_red(u, v, true);
                }
                i += 1;
            }
        }
        Ok(g)
    }
}

// ===== Bit-row helpers =====

#[inline]
fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn count_intersection(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
fn intersect_into(out: &mut [u64], a: &[u64], b: &[u64]) {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

/// Indices of set bits in a packed row.
fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(Some(w), |&cur| Some(cur & cur.wrapping_sub(1)))
            .take_while(|&cur| cur != 0)
            .map(move |cur| (wi << 6) + cur.trailing_zeros() as usize)
    })
}

/// Indices of set bits strictly above `floor`.
fn set_bits_above(words: &[u64], floor: usize) -> impl Iterator<Item = usize> + '_ {
    let skip_words = word_of(floor);
    words[skip_words..].iter().enumerate().flat_map(move |(wi, &w)| {
        let w = if wi == 0 { w & !((bit_of(floor) << 1).wrapping_sub(1)) } else { w };
        std::iter::successors(Some(w), |&cur| Some(cur & cur.wrapping_sub(1)))
            .take_while(|&cur| cur != 0)
            .map(move |cur| ((skip_words + wi) << 6) + cur.trailing_zeros() as usize)
    })
}
