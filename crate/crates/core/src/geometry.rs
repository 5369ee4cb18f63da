//! Euclidean primitives in arbitrary dimension: points, segments, polygonal
//! curves, set distances between them, and curve canonicalization.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point in d-dimensional Euclidean space, d >= 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point<F = f64> {
    coords: Vec<F>,
}

impl<F: Scalar> Point<F> {
    pub fn new(coords: Vec<F>) -> Self {
        assert!(!coords.is_empty(), "a point needs at least one coordinate");
        debug_assert!(coords.iter().all(|c| c.is_finite()));
        Point { coords }
    }

    /// Convenience constructor for a 1-dimensional point.
    pub fn scalar(x: F) -> Self {
        Point::new(vec![x])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn distance(&self, other: &Point<F>) -> F {
        debug_assert_eq!(self.dim(), other.dim());
        sq_dist(&self.coords, &other.coords).sqrt()
    }

    pub fn translate(&self, offset: &[F]) -> Point<F> {
        debug_assert_eq!(self.dim(), offset.len());
        Point::new(self.coords.iter().zip(offset).map(|(&c, &o)| c + o).collect())
    }

    pub fn scale(&self, factor: F) -> Point<F> {
        Point::new(self.coords.iter().map(|&c| c * factor).collect())
    }

    fn lerp(&self, other: &Point<F>, t: F) -> Point<F> {
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a + t * (b - a))
                .collect(),
        )
    }
}

pub(crate) fn sq_dist<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let d = x - y;
            d * d
        })
        .fold(F::zero(), |acc, d| acc + d)
}

fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).map(|(&x, &y)| x * y).fold(F::zero(), |acc, d| acc + d)
}

/// The linear interpolation of two points of equal dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment<F = f64> {
    pub a: Point<F>,
    pub b: Point<F>,
}

impl<F: Scalar> Segment<F> {
    pub fn new(a: Point<F>, b: Point<F>) -> Self {
        assert_eq!(a.dim(), b.dim(), "segment endpoints must share a dimension");
        Segment { a, b }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn len(&self) -> F {
        self.a.distance(&self.b)
    }

    pub fn point_at(&self, t: F) -> Point<F> {
        self.a.lerp(&self.b, t)
    }
}

/// A polygonal curve: an ordered, non-empty list of same-dimension vertices.
/// A single vertex is a legal (degenerate) curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curve<F = f64> {
    vertices: Vec<Point<F>>,
}

impl<F: Scalar> Curve<F> {
    pub fn new(vertices: Vec<Point<F>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyInput("curve needs at least one vertex"));
        }
        let d = vertices[0].dim();
        for v in &vertices {
            if v.dim() != d {
                return Err(Error::DimensionMismatch(d, v.dim()));
            }
        }
        Ok(Curve { vertices })
    }

    /// Builds a curve from a flat coordinate list laid out vertex-major.
    pub fn from_flat(dim: usize, coords: &[F]) -> Result<Self> {
        if dim == 0 || coords.is_empty() || coords.len() % dim != 0 {
            return Err(Error::InvalidParameter(format!(
                "flat coordinate list of length {} does not tile dimension {}",
                coords.len(),
                dim
            )));
        }
        Curve::new(coords.chunks(dim).map(|c| Point::new(c.to_vec())).collect())
    }

    /// One-dimensional curve from a list of scalars.
    pub fn polyline_1d(xs: &[F]) -> Self {
        Curve::new(xs.iter().map(|&x| Point::scalar(x)).collect()).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    /// Complexity: the number of vertices.
    pub fn complexity(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point<F>] {
        &self.vertices
    }

    pub fn first(&self) -> &Point<F> {
        &self.vertices[0]
    }

    pub fn last(&self) -> &Point<F> {
        self.vertices.last().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point<F>, &Point<F>)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Maximum edge length, or zero for a single-vertex curve.
    pub fn max_edge_len(&self) -> F {
        self.edges()
            .map(|(a, b)| a.distance(b))
            .fold(F::zero(), F::max)
    }

    pub fn translate(&self, offset: &[F]) -> Curve<F> {
        Curve {
            vertices: self.vertices.iter().map(|v| v.translate(offset)).collect(),
        }
    }

    pub fn scale(&self, factor: F) -> Curve<F> {
        Curve {
            vertices: self.vertices.iter().map(|v| v.scale(factor)).collect(),
        }
    }

    /// Lexicographic order on (dimension, vertex coordinate sequence).
    /// Total for finite coordinates.
    pub fn lex_cmp(&self, other: &Curve<F>) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| {
            let sc = self.vertices.iter().flat_map(|v| v.coords());
            let oc = other.vertices.iter().flat_map(|v| v.coords());
            for (a, b) in sc.zip(oc) {
                match a.partial_cmp(b) {
                    Some(Ordering::Equal) => continue,
                    Some(ord) => return ord,
                    None => unreachable!("curve coordinates are finite"),
                }
            }
            self.complexity().cmp(&other.complexity())
        })
    }
}

/// Euclidean distance from a point to a segment (as a point set).
pub fn point_segment_distance<F: Scalar>(p: &Point<F>, s: &Segment<F>) -> Result<F> {
    if p.dim() != s.dim() {
        return Err(Error::DimensionMismatch(p.dim(), s.dim()));
    }
    Ok(point_segment_distance_unchecked(p, s))
}

fn point_segment_distance_unchecked<F: Scalar>(p: &Point<F>, s: &Segment<F>) -> F {
    let u: Vec<F> = s
        .b
        .coords()
        .iter()
        .zip(s.a.coords())
        .map(|(&b, &a)| b - a)
        .collect();
    let w: Vec<F> = p
        .coords()
        .iter()
        .zip(s.a.coords())
        .map(|(&pc, &ac)| pc - ac)
        .collect();
    let uu = dot(&u, &u);
    if uu == F::zero() {
        return p.distance(&s.a);
    }
    let t = (dot(&w, &u) / uu).max(F::zero()).min(F::one());
    p.distance(&s.point_at(t))
}

/// Minimum Euclidean distance between two segments as point sets; zero iff
/// they intersect.
///
/// The squared distance is a convex quadratic over the parameter square, so
/// the minimum is either the unconstrained critical point (when it falls
/// inside the square) or lies on one of the four boundary edges, each of
/// which reduces to a point-segment problem.
pub fn segment_segment_distance<F: Scalar>(s1: &Segment<F>, s2: &Segment<F>) -> Result<F> {
    if s1.dim() != s2.dim() {
        return Err(Error::DimensionMismatch(s1.dim(), s2.dim()));
    }
    let u: Vec<F> = s1
        .b
        .coords()
        .iter()
        .zip(s1.a.coords())
        .map(|(&b, &a)| b - a)
        .collect();
    let v: Vec<F> = s2
        .b
        .coords()
        .iter()
        .zip(s2.a.coords())
        .map(|(&b, &a)| b - a)
        .collect();
    let w0: Vec<F> = s1
        .a
        .coords()
        .iter()
        .zip(s2.a.coords())
        .map(|(&a1, &a2)| a1 - a2)
        .collect();

    let mut best = point_segment_distance_unchecked(&s1.a, s2)
        .min(point_segment_distance_unchecked(&s1.b, s2))
        .min(point_segment_distance_unchecked(&s2.a, s1))
        .min(point_segment_distance_unchecked(&s2.b, s1));

    let uu = dot(&u, &u);
    let vv = dot(&v, &v);
    let uv = dot(&u, &v);
    let det = uu * vv - uv * uv;
    if det > F::zero() {
        let uw = dot(&u, &w0);
        let vw = dot(&v, &w0);
        let s = (uv * vw - vv * uw) / det;
        let t = (uu * vw - uv * uw) / det;
        if s >= F::zero() && s <= F::one() && t >= F::zero() && t <= F::one() {
            let p = s1.point_at(s);
            let q = s2.point_at(t);
            best = best.min(p.distance(&q));
        }
    }
    Ok(best)
}

/// Removes interior vertices that lie on the segment between their two
/// neighbours (within the geometric tolerance), yielding the canonical vertex
/// sequence of the curve's equivalence class. Endpoints are preserved and the
/// result is a fixed point of the operation.
pub fn canonicalize<F: Scalar>(c: &Curve<F>) -> Curve<F> {
    let tol = F::geom_tol();
    let mut out: Vec<Point<F>> = Vec::with_capacity(c.complexity());
    for v in c.vertices() {
        while out.len() >= 2 {
            let seg = Segment::new(out[out.len() - 2].clone(), v.clone());
            if point_segment_distance_unchecked(&out[out.len() - 1], &seg) <= tol {
                out.pop();
            } else {
                break;
            }
        }
        out.push(v.clone());
    }
    Curve { vertices: out }
}
