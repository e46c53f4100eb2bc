//! Zonotopes: a center plus a list of segment generators.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::point::{check_dim, Point};
use crate::polytope::VPolytope;

/// `center + Σᵢ [0, gᵢ]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Zonotope {
    dim: usize,
    center: Point,
    generators: Vec<Point>,
}

/// Expansion cap: 2^g candidate vertices.
const MAX_GENERATORS_EXPAND: usize = 16;

impl Zonotope {
    pub fn new(dim: usize, center: Point, generators: Vec<Point>) -> Result<Self> {
        check_dim(dim)?;
        if center.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                got: center.dim(),
            });
        }
        for g in &generators {
            if g.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
        }
        Ok(Zonotope {
            dim,
            center,
            generators,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Minkowski sum of zonotopes: centers add, generator lists concatenate.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(Zonotope {
            dim: self.dim,
            center: self.center.add(&other.center),
            generators,
        })
    }

    pub fn reflect(&self) -> Self {
        Zonotope {
            dim: self.dim,
            center: self.center.neg(),
            generators: self.generators.iter().map(Point::neg).collect(),
        }
    }

    /// Expand into the canonical vertex representation by summing generator
    /// subsets.
    pub fn to_polytope(&self) -> Result<VPolytope> {
        let g = self.generators.len();
        if g > MAX_GENERATORS_EXPAND {
            return Err(GeometryError::TooLarge(format!(
                "zonotope expansion with {g} generators exceeds cap {MAX_GENERATORS_EXPAND}"
            )));
        }
        let mut pts = Vec::with_capacity(1 << g);
        for mask in 0..1u32 << g {
            let mut p = self.center.clone();
            for (i, gen) in self.generators.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    p = p.add(gen);
                }
            }
            pts.push(p);
        }
        VPolytope::new(self.dim, pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn cube_as_zonotope() {
        let z = Zonotope::new(
            3,
            Point::origin(3),
            (0..3).map(|i| Point::unit(3, i)).collect(),
        )
        .unwrap();
        let p = z.to_polytope().unwrap();
        assert_eq!(p, VPolytope::unit_cube(3).unwrap());
        assert_eq!(p.volume(), Scalar::one());
    }

    #[test]
    fn sum_is_generator_concatenation() {
        let z1 = Zonotope::new(2, Point::origin(2), vec![Point::from_ints(&[1, 0])]).unwrap();
        let z2 = Zonotope::new(
            2,
            Point::from_ints(&[5, 5]),
            vec![Point::from_ints(&[0, 1]), Point::from_ints(&[1, 1])],
        )
        .unwrap();
        let s = z1.minkowski_sum(&z2).unwrap();
        assert_eq!(s.generators().len(), 3);
        // expansion equals polytope-level Minkowski sum
        let direct = s.to_polytope().unwrap();
        let via_polytopes = z1
            .to_polytope()
            .unwrap()
            .minkowski_sum(&z2.to_polytope().unwrap())
            .unwrap();
        assert_eq!(direct, via_polytopes);
    }

    /// Exact zonotope volume: Σ over dim-subsets of generators |det|.
    fn volume_by_determinants(z: &Zonotope) -> Scalar {
        let d = z.dim();
        let gens = z.generators();
        let n = gens.len();
        let mut total = Scalar::zero();
        let mut idx: Vec<usize> = (0..d).collect();
        if n < d {
            return Scalar::zero();
        }
        loop {
            // |det| of the selected generators
            let rows: Vec<Vec<Scalar>> = idx.iter().map(|&i| gens[i].coords().to_vec()).collect();
            total = &total + &scalar_det(&rows).abs();
            // next combination
            let mut k = d;
            loop {
                if k == 0 {
                    return total;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] <= n - (d - k) {
                    for j in k + 1..d {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn scalar_det(rows: &[Vec<Scalar>]) -> Scalar {
        match rows.len() {
            1 => rows[0][0].clone(),
            2 => &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0]),
            n => {
                let mut acc = Scalar::zero();
                for j in 0..n {
                    let minor: Vec<Vec<Scalar>> = rows[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(c, _)| *c != j)
                                .map(|(_, v)| v.clone())
                                .collect()
                        })
                        .collect();
                    let t = &rows[0][j] * &scalar_det(&minor);
                    acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
                }
                acc
            }
        }
    }

    #[test]
    fn volume_matches_determinant_formula() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for dim in [2usize, 3] {
            for _ in 0..10 {
                let gens: Vec<Point> = (0..dim + 2)
                    .map(|_| {
                        Point::new(
                            (0..dim)
                                .map(|_| Scalar::ratio(rng.gen_range(-8..=8), 4))
                                .collect(),
                        )
                    })
                    .collect();
                let z = Zonotope::new(dim, Point::origin(dim), gens).unwrap();
                assert_eq!(
                    z.to_polytope().unwrap().volume(),
                    volume_by_determinants(&z)
                );
            }
        }
    }
}
