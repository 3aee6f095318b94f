//! Edge-coloring constructions: random samples, structured block colorings,
//! and Paley graphs over finite fields.
//!
//! Each construction is described by a [`ConstructionSpec`] that can be
//! serialized to a flat key-value record and rebuilt bit-for-bit later.
//! Randomized constructions draw every pair color independently from a
//! counter-based stream, so the output depends only on the spec itself.

use std::fmt;

use crate::field::{FieldError, FieldTable};
use crate::graph::ColoredCompleteGraph;
use crate::rng::{pair_index, PairStream};

/// Errors reported by construction builders and spec parsing.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConstructionError {
    /// A probability parameter was outside `[0, 1]` (or NaN).
    #[error("probability {0} is not in [0, 1]")]
    BadProbability(f64),
    /// A random coloring needs at least two vertices to have any pairs.
    #[error("random coloring needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    /// Three-block colorings need the vertex count split into equal thirds.
    #[error("vertex count {0} must be a positive multiple of 3")]
    NotDivisibleByThree(usize),
    /// The underlying field could not be built.
    #[error(transparent)]
    Field(#[from] FieldError),
    /// Paley colorings need `q = 1 (mod 4)` so that -1 is a square and the
    /// red relation is symmetric.
    #[error("paley order {0} must be congruent to 1 mod 4")]
    PaleyCongruence(usize),
    /// Block colorings need at least two blocks.
    #[error("block count {0} must be at least 2")]
    BadBlockCount(usize),
    /// Block colorings need at least one page per block.
    #[error("page parameter {0} must be at least 1")]
    BadPageCount(usize),
    /// The requested construction would exceed the supported size cap.
    #[error("construction on {n} vertices exceeds the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    /// A serialized spec record could not be parsed.
    #[error("bad construction record: {0}")]
    BadRecord(String),
}

/// Largest vertex count any construction will build.
pub const MAX_CONSTRUCTION_VERTICES: usize = 10_000;

/// A self-contained description of one coloring construction.
///
/// The spec captures every input the builder consumes, so `build` is a pure
/// function of the spec: two calls always produce identical colorings.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstructionSpec {
    /// Independent uniform pair colors: each pair is blue with the given
    /// probability, red otherwise.
    Random {
        n_vertices: usize,
        blue_probability: f64,
        seed: u64,
    },
    /// Three equal blocks with red interiors; cross pairs are red with
    /// probability `p`, blue otherwise.
    ThreeBlock {
        n_vertices: usize,
        p: f64,
        seed: u64,
    },
    /// Paley coloring on the field of order `q`: a pair is red exactly when
    /// its difference is a nonzero square.
    Paley { q: usize },
    /// `k` disjoint blue cliques of size `n + k - 1` with all cross pairs red.
    Blocks { k: usize, n: usize },
}

impl ConstructionSpec {
    /// Builds the coloring this spec describes.
    pub fn build(&self) -> Result<ColoredCompleteGraph, ConstructionError> {
        match *self {
            ConstructionSpec::Random {
                n_vertices,
                blue_probability,
                seed,
            } => random_coloring(n_vertices, blue_probability, seed),
            ConstructionSpec::ThreeBlock { n_vertices, p, seed } => {
                three_block(n_vertices, p, seed)
            }
            ConstructionSpec::Paley { q } => paley(q),
            ConstructionSpec::Blocks { k, n } => block_coloring(k, n),
        }
    }

    /// Number of vertices the built coloring will have.
    pub fn n_vertices(&self) -> usize {
        match *self {
            ConstructionSpec::Random { n_vertices, .. } => n_vertices,
            ConstructionSpec::ThreeBlock { n_vertices, .. } => n_vertices,
            ConstructionSpec::Paley { q } => q,
            ConstructionSpec::Blocks { k, n } => k * (n + k - 1),
        }
    }

    /// True when the construction consumes a seed.
    pub fn is_randomized(&self) -> bool {
        matches!(
            self,
            ConstructionSpec::Random { .. } | ConstructionSpec::ThreeBlock { .. }
        )
    }

    /// Returns a copy with the seed replaced; deterministic specs are
    /// returned unchanged.
    pub fn with_seed(&self, new_seed: u64) -> ConstructionSpec {
        let mut copy = self.clone();
        match copy {
            ConstructionSpec::Random { ref mut seed, .. }
            | ConstructionSpec::ThreeBlock { ref mut seed, .. } => *seed = new_seed,
            _ => {}
        }
        copy
    }

    /// Short human-readable description.
    pub fn description(&self) -> String {
        match *self {
            ConstructionSpec::Random {
                n_vertices,
                blue_probability,
                seed,
            } => format!(
                "random coloring on {n_vertices} vertices, blue probability {blue_probability}, seed {seed}"
            ),
            ConstructionSpec::ThreeBlock { n_vertices, p, seed } => format!(
                "three-block coloring on {n_vertices} vertices, cross red probability {p}, seed {seed}"
            ),
            ConstructionSpec::Paley { q } => format!("paley coloring of order {q}"),
            ConstructionSpec::Blocks { k, n } => {
                format!("{k} blue blocks of size {}", n + k - 1)
            }
        }
    }

    /// Serializes the spec as a single-line key-value record.
    pub fn to_record(&self) -> String {
        match *self {
            ConstructionSpec::Random {
                n_vertices,
                blue_probability,
                seed,
            } => format!("kind=random n={n_vertices} blue-probability={blue_probability} seed={seed}"),
            ConstructionSpec::ThreeBlock { n_vertices, p, seed } => {
                format!("kind=three-block n={n_vertices} p={p} seed={seed}")
            }
            ConstructionSpec::Paley { q } => format!("kind=paley q={q}"),
            ConstructionSpec::Blocks { k, n } => format!("kind=blocks k={k} n={n}"),
        }
    }

    /// Parses a record produced by [`Self::to_record`].
    pub fn parse_record(record: &str) -> Result<ConstructionSpec, ConstructionError> {
        let mut kind = None;
        let mut fields: Vec<(String, String)> = Vec::new();
        for token in record.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| ConstructionError::BadRecord(format!("token `{token}` has no `=`")))?;
            if key == "kind" {
                kind = Some(value.to_string());
            } else {
                fields.push((key.to_string(), value.to_string()));
            }
        }
        let kind = kind.ok_or_else(|| ConstructionError::BadRecord("missing kind".into()))?;

        let lookup = |name: &str| -> Result<&str, ConstructionError> {
            fields
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| ConstructionError::BadRecord(format!("missing field `{name}`")))
        };
        let parse_usize = |name: &str| -> Result<usize, ConstructionError> {
            lookup(name)?
                .parse::<usize>()
                .map_err(|_| ConstructionError::BadRecord(format!("field `{name}` is not an integer")))
        };
        let parse_u64 = |name: &str| -> Result<u64, ConstructionError> {
            lookup(name)?
                .parse::<u64>()
                .map_err(|_| ConstructionError::BadRecord(format!("field `{name}` is not an integer")))
        };
        let parse_f64 = |name: &str| -> Result<f64, ConstructionError> {
            lookup(name)?
                .parse::<f64>()
                .map_err(|_| ConstructionError::BadRecord(format!("field `{name}` is not a number")))
        };

        match kind.as_str() {
            "random" => Ok(ConstructionSpec::Random {
                n_vertices: parse_usize("n")?,
                blue_probability: parse_f64("blue-probability")?,
                seed: parse_u64("seed")?,
            }),
            "three-block" => Ok(ConstructionSpec::ThreeBlock {
                n_vertices: parse_usize("n")?,
                p: parse_f64("p")?,
                seed: parse_u64("seed")?,
            }),
            "paley" => Ok(ConstructionSpec::Paley { q: parse_usize("q")? }),
            "blocks" => Ok(ConstructionSpec::Blocks {
                k: parse_usize("k")?,
                n: parse_usize("n")?,
            }),
            other => Err(ConstructionError::BadRecord(format!("unknown kind `{other}`"))),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description())
    }
}

fn check_probability(p: f64) -> Result<(), ConstructionError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(ConstructionError::BadProbability(p))
    }
}

fn check_size(n: usize) -> Result<(), ConstructionError> {
    if n > MAX_CONSTRUCTION_VERTICES {
        Err(ConstructionError::TooManyVertices {
            n,
            cap: MAX_CONSTRUCTION_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Samples a uniform random coloring: each pair is blue with probability
/// `blue_probability`, red otherwise, all pairs independent.
///
/// The color of each pair depends only on `(n_vertices, blue_probability,
/// seed)`, never on evaluation order.
pub fn random_coloring(
    n_vertices: usize,
    blue_probability: f64,
    seed: u64,
) -> Result<ColoredCompleteGraph, ConstructionError> {
    if n_vertices < 2 {
        return Err(ConstructionError::TooFewVertices(n_vertices));
    }
    check_size(n_vertices)?;
    check_probability(blue_probability)?;
    let stream = PairStream::new(seed);
    let mut g = ColoredCompleteGraph::new_all_blue(n_vertices).expect("n_vertices >= 2");
    for u in 0..n_vertices {
        for v in (u + 1)..n_vertices {
            if stream.unit(pair_index(n_vertices, u, v)) >= blue_probability {
                g.set_red(u, v, true);
            }
        }
    }
    Ok(g)
}

/// Builds a three-block coloring: vertices split into thirds, pairs inside a
/// block are red, and each cross pair is red with probability `p`.
///
/// `n_vertices` must be a positive multiple of 3 so the blocks are equal.
pub fn three_block(
    n_vertices: usize,
    p: f64,
    seed: u64,
) -> Result<ColoredCompleteGraph, ConstructionError> {
    if n_vertices == 0 || n_vertices % 3 != 0 {
        return Err(ConstructionError::NotDivisibleByThree(n_vertices));
    }
    check_size(n_vertices)?;
    check_probability(p)?;
    let third = n_vertices / 3;
    let stream = PairStream::new(seed);
    let mut g = ColoredCompleteGraph::new_all_blue(n_vertices).expect("n_vertices >= 3");
    for u in 0..n_vertices {
        for v in (u + 1)..n_vertices {
            let same_block = u / third == v / third;
            if same_block || stream.unit(pair_index(n_vertices, u, v)) < p {
                g.set_red(u, v, true);
            }
        }
    }
    Ok(g)
}

/// Builds the Paley coloring on the field of order `q`: vertices are field
/// elements and a pair `{u, v}` is red exactly when `u - v` is a nonzero
/// square.
///
/// Requires `q = 1 (mod 4)` so that `-1` is a square and redness does not
/// depend on the order of `u` and `v`.
pub fn paley(q: usize) -> Result<ColoredCompleteGraph, ConstructionError> {
    check_size(q)?;
    let field = FieldTable::build(q)?;
    if q % 4 != 1 {
        return Err(ConstructionError::PaleyCongruence(q));
    }
    let mut g = ColoredCompleteGraph::new_all_blue(q).expect("q >= 5");
    for u in 0..q {
        for v in (u + 1)..q {
            if field.is_nonzero_square(field.sub(u, v)) {
                g.set_red(u, v, true);
            }
        }
    }
    Ok(g)
}

/// Builds `k` disjoint blue cliques of size `n + k - 1` with every cross pair
/// red.
///
/// The total vertex count `k * (n + k - 1)` must stay within the size cap.
pub fn block_coloring(k: usize, n: usize) -> Result<ColoredCompleteGraph, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::BadBlockCount(k));
    }
    if n < 1 {
        return Err(ConstructionError::BadPageCount(n));
    }
    let block = n + k - 1;
    let total = k * block;
    check_size(total)?;
    let mut g = ColoredCompleteGraph::new_all_blue(total).expect("total >= 4");
    for u in 0..total {
        for v in (u + 1)..total {
            if u / block != v / block {
                g.set_red(u, v, true);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;

    #[test]
    fn random_rejects_bad_arguments() {
        assert_eq!(
            random_coloring(1, 0.5, 0),
            Err(ConstructionError::TooFewVertices(1))
        );
        assert!(matches!(
            random_coloring(10, -0.1, 0),
            Err(ConstructionError::BadProbability(_))
        ));
        assert!(matches!(
            random_coloring(10, 1.5, 0),
            Err(ConstructionError::BadProbability(_))
        ));
        assert!(matches!(
            random_coloring(10, f64::NAN, 0),
            Err(ConstructionError::BadProbability(_))
        ));
        assert!(matches!(
            random_coloring(10_001, 0.5, 0),
            Err(ConstructionError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn random_extreme_probabilities() {
        let all_red = random_coloring(12, 0.0, 99).unwrap();
        assert_eq!(all_red.edge_count(Color::Blue), 0);
        assert_eq!(all_red.edge_count(Color::Red), 66);
        let all_blue = random_coloring(12, 1.0, 99).unwrap();
        assert_eq!(all_blue.edge_count(Color::Red), 0);
        assert_eq!(all_blue.edge_count(Color::Blue), 66);
    }

    #[test]
    fn random_blue_fraction_near_half() {
        // 2000 vertices give 1_999_000 pairs; the sample fraction should sit
        // well inside 0.5 +/- 0.01 for every seed.
        for seed in [1_u64, 2, 3, 4, 5] {
            let g = random_coloring(2000, 0.5, seed).unwrap();
            let blue = g.edge_count(Color::Blue) as f64;
            let total = (2000.0 * 1999.0) / 2.0;
            let fraction = blue / total;
            assert!(
                (fraction - 0.5).abs() < 0.01,
                "seed {seed}: blue fraction {fraction}"
            );
        }
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_coloring(97, 0.3, 1234).unwrap();
        let b = random_coloring(97, 0.3, 1234).unwrap();
        assert_eq!(a, b);
        let c = random_coloring(97, 0.3, 1235).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn three_block_rejects_bad_sizes() {
        for n in [0_usize, 1, 2, 4, 100] {
            assert_eq!(
                three_block(n, 0.5, 0),
                Err(ConstructionError::NotDivisibleByThree(n))
            );
        }
    }

    #[test]
    fn three_block_extremes() {
        let all_red = three_block(30, 1.0, 5).unwrap();
        assert_eq!(all_red.edge_count(Color::Blue), 0);

        // p = 0: red pairs are exactly the intra-block ones.
        let split = three_block(30, 0.0, 5).unwrap();
        for u in 0..30 {
            for v in (u + 1)..30 {
                let same = u / 10 == v / 10;
                assert_eq!(split.is_red(u, v), same, "pair ({u}, {v})");
            }
        }
    }

    #[test]
    fn three_block_intra_density_is_exactly_one() {
        let g = three_block(60, 0.35, 77).unwrap();
        // Split the first block in two halves; every pair between them is
        // intra-block and must be red.
        let xs: Vec<usize> = (0..10).collect();
        let ys: Vec<usize> = (10..20).collect();
        let report = g.pair_density(&xs, &ys, Color::Red).unwrap();
        assert_eq!(report.red_density, 1.0);
        assert_eq!(report.blue_pairs, 0);
    }

    #[test]
    fn three_block_cross_density_tracks_p() {
        // Between two full blocks the red density concentrates near p.
        let mut total = 0.0;
        let seeds = [11_u64, 12, 13, 14, 15];
        let xs: Vec<usize> = (0..200).collect();
        let ys: Vec<usize> = (200..400).collect();
        for &seed in &seeds {
            let g = three_block(600, 0.35, seed).unwrap();
            let report = g.pair_density(&xs, &ys, Color::Red).unwrap();
            total += report.red_density;
        }
        let mean = total / seeds.len() as f64;
        assert!((mean - 0.35).abs() < 0.01, "mean cross red density {mean}");
    }

    #[test]
    fn three_block_intra_codegree_mean_matches_expectation() {
        // On 600 vertices with p = 0.5 the red codegree of an intra pair has
        // mean 198 + 400 * 0.25 = 298.
        let third = 200_usize;
        let mut grand = 0.0;
        let seeds: Vec<u64> = (1..=10).collect();
        for &seed in &seeds {
            let g = three_block(600, 0.5, seed).unwrap();
            let mut sum = 0_usize;
            let mut count = 0_usize;
            for b in 0..3 {
                let lo = b * third;
                for u in lo..(lo + third) {
                    for v in (u + 1)..(lo + third) {
                        sum += g.codegree(u, v, Color::Red).unwrap();
                        count += 1;
                    }
                }
            }
            grand += sum as f64 / count as f64;
        }
        let mean = grand / seeds.len() as f64;
        assert!((mean - 298.0).abs() < 15.0, "intra codegree mean {mean}");
    }

    #[test]
    fn paley_rejects_bad_orders() {
        assert!(matches!(paley(6), Err(ConstructionError::Field(_))));
        // Prime powers that are 3 mod 4 are fields but not Paley orders.
        for q in [3_usize, 7, 11, 27] {
            assert_eq!(paley(q), Err(ConstructionError::PaleyCongruence(q)));
        }
    }

    #[test]
    fn paley_five_is_the_pentagon() {
        let g = paley(5).unwrap();
        let pentagon =
            ColoredCompleteGraph::from_red_relation(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
                .unwrap();
        assert_eq!(g, pentagon);
        let red = g.book_size(Color::Red);
        let blue = g.book_size(Color::Blue);
        assert_eq!(red.pages, 0);
        assert_eq!(blue.pages, 0);
        assert!(red.has_base());
        assert!(blue.has_base());
    }

    #[test]
    fn paley_thirteen_has_two_pages_in_both_colors() {
        let g = paley(13).unwrap();
        assert_eq!(g.book_size(Color::Red).pages, 2);
        assert_eq!(g.book_size(Color::Blue).pages, 2);
    }

    #[test]
    fn paley_twenty_nine_has_six_pages_in_both_colors() {
        let g = paley(29).unwrap();
        assert_eq!(g.book_size(Color::Red).pages, 6);
        assert_eq!(g.book_size(Color::Blue).pages, 6);
    }

    #[test]
    fn paley_self_dual_under_non_residue_scaling() {
        // Multiplying every vertex by a non-residue swaps the two colors.
        for q in [5_usize, 13, 17, 29] {
            let field = FieldTable::build(q).unwrap();
            let s = field.smallest_non_residue().unwrap();
            let g = paley(q).unwrap();
            for u in 0..q {
                for v in (u + 1)..q {
                    let su = field.mul(s, u);
                    let sv = field.mul(s, v);
                    assert_eq!(
                        g.is_red(u, v),
                        !g.is_red(su, sv),
                        "q={q} pair ({u}, {v})"
                    );
                }
            }
        }
    }

    #[test]
    fn paley_prime_power_orders_balance_pages() {
        for q in [9_usize, 25, 49] {
            let g = paley(q).unwrap();
            assert_eq!(
                g.book_size(Color::Red).pages,
                g.book_size(Color::Blue).pages,
                "q={q}"
            );
        }
    }

    #[test]
    fn blocks_reject_bad_parameters() {
        assert_eq!(block_coloring(1, 5), Err(ConstructionError::BadBlockCount(1)));
        assert_eq!(block_coloring(3, 0), Err(ConstructionError::BadPageCount(0)));
        assert!(matches!(
            block_coloring(2, 9_999),
            Err(ConstructionError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn blocks_two_by_five() {
        let g = block_coloring(2, 5).unwrap();
        assert_eq!(g.n_vertices(), 12);
        assert_eq!(g.book_size(Color::Red).pages, 0);
        assert_eq!(g.book_size(Color::Blue).pages, 4);
    }

    #[test]
    fn blocks_smallest_case() {
        let g = block_coloring(2, 1).unwrap();
        assert_eq!(g.n_vertices(), 4);
        let blue = g.book_size(Color::Blue);
        assert!(blue.has_base());
        assert_eq!(blue.pages, 0);
    }

    #[test]
    fn blocks_three_by_four_has_no_red_triangle_pages() {
        let g = block_coloring(3, 4).unwrap();
        assert_eq!(g.n_vertices(), 18);
        let m = g.book_size_k(Color::Red, 3).unwrap();
        assert!(m.has_base());
        assert_eq!(m.pages, 0);
    }

    #[test]
    fn spec_records_round_trip() {
        let specs = [
            ConstructionSpec::Random {
                n_vertices: 570,
                blue_probability: 0.5,
                seed: 42,
            },
            ConstructionSpec::Random {
                n_vertices: 100,
                blue_probability: 1.0 / 3.0,
                seed: 7,
            },
            ConstructionSpec::ThreeBlock {
                n_vertices: 600,
                p: 0.311,
                seed: 9,
            },
            ConstructionSpec::Paley { q: 29 },
            ConstructionSpec::Blocks { k: 2, n: 50 },
        ];
        for spec in &specs {
            let record = spec.to_record();
            let back = ConstructionSpec::parse_record(&record).unwrap();
            assert_eq!(&back, spec, "record `{record}`");
        }
    }

    #[test]
    fn spec_record_parse_errors() {
        assert!(matches!(
            ConstructionSpec::parse_record("n=5 seed=1"),
            Err(ConstructionError::BadRecord(_))
        ));
        assert!(matches!(
            ConstructionSpec::parse_record("kind=mystery n=5"),
            Err(ConstructionError::BadRecord(_))
        ));
        assert!(matches!(
            ConstructionSpec::parse_record("kind=paley"),
            Err(ConstructionError::BadRecord(_))
        ));
        assert!(matches!(
            ConstructionSpec::parse_record("kind=random n=x blue-probability=0.5 seed=1"),
            Err(ConstructionError::BadRecord(_))
        ));
    }

    #[test]
    fn spec_build_matches_free_functions() {
        let spec = ConstructionSpec::ThreeBlock {
            n_vertices: 30,
            p: 0.4,
            seed: 3,
        };
        assert_eq!(spec.build().unwrap(), three_block(30, 0.4, 3).unwrap());
        assert!(spec.is_randomized());
        assert!(!ConstructionSpec::Paley { q: 13 }.is_randomized());
        assert_eq!(spec.n_vertices(), 30);
        assert_eq!(ConstructionSpec::Blocks { k: 3, n: 4 }.n_vertices(), 18);
    }

    #[test]
    fn with_seed_replaces_only_randomized_seeds() {
        let spec = ConstructionSpec::Random {
            n_vertices: 20,
            blue_probability: 0.5,
            seed: 1,
        };
        let reseeded = spec.with_seed(999);
        assert_eq!(
            reseeded,
            ConstructionSpec::Random {
                n_vertices: 20,
                blue_probability: 0.5,
                seed: 999,
            }
        );
        let paley = ConstructionSpec::Paley { q: 13 };
        assert_eq!(paley.with_seed(999), paley);
    }
}
