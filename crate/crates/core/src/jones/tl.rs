//! The Temperley–Lieb algebra on three strands.
//!
//! Elements are combinations of the five planar diagrams
//! `1, e1, e2, e1e2, e2e1`. Structure constants and closure loop counts are
//! computed by actually gluing diagrams, not tabulated by hand.

use std::ops::{Add, Mul};
use std::sync::OnceLock;

use crate::laurent::{LaurentPoly, Var};
use crate::word::Word;

/// A noncrossing perfect matching on six boundary points: top `0, 1, 2`
/// (left to right) and bottom `3, 4, 5`. `partner[p]` is the point joined to `p`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    partner: [u8; 6],
}

impl Diagram {
    fn from_arcs(arcs: [(u8, u8); 3]) -> Self {
        let mut partner = [0u8; 6];
        for (a, b) in arcs {
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        Diagram { partner }
    }

    pub fn identity() -> Self {
        Diagram::from_arcs([(0, 3), (1, 4), (2, 5)])
    }

    /// Cup-cap on strands `i, i+1` (`i ∈ {1, 2}`).
    pub fn generator(i: u8) -> Self {
        match i {
            1 => Diagram::from_arcs([(0, 1), (3, 4), (2, 5)]),
            2 => Diagram::from_arcs([(1, 2), (4, 5), (0, 3)]),
            _ => panic!("TL3 generators are e1 and e2"),
        }
    }

    /// Stacks `self` above `below`. Returns the resulting diagram and the
    /// number of closed loops formed in the middle.
    pub fn compose(&self, below: &Diagram) -> (Diagram, u32) {
        // Points: 0..6 are self's, 6..12 are below's. self's bottom point 3+i
        // is glued to below's top point 6+i.
        let glue = |p: usize| -> Option<usize> {
            match p {
                3..=5 => Some(p + 3),
                6..=8 => Some(p - 3),
                _ => None,
            }
        };
        let arc = |p: usize| -> usize {
            if p < 6 {
                self.partner[p] as usize
            } else {
                below.partner[p - 6] as usize + 6
            }
        };
        let outer = |p: usize| p <= 2 || p >= 9;
        let mut visited = [false; 12];
        let mut partner = [0u8; 6];
        for start in (0..12).filter(|&p| outer(p)) {
            if visited[start] {
                continue;
            }
            let mut p = start;
            visited[p] = true;
            loop {
                let q = arc(p);
                visited[q] = true;
                if outer(q) {
                    let label = |x: usize| if x <= 2 { x } else { x - 6 };
                    partner[label(start)] = label(q) as u8;
                    partner[label(q)] = label(start) as u8;
                    break;
                }
                p = glue(q).expect("inner point is glued");
                visited[p] = true;
            }
        }
        // Whatever is left in the middle forms closed loops.
        let mut loops = 0;
        for start in 3..9 {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                let q = arc(p);
                visited[q] = true;
                p = glue(q).expect("inner point is glued");
            }
        }
        (Diagram { partner }, loops)
    }

    /// Loops obtained by joining top point `i` to bottom point `3 + i`.
    pub fn closure_loops(&self) -> u32 {
        let mut visited = [false; 6];
        let mut loops = 0;
        for start in 0..6 {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                let q = self.partner[p] as usize;
                visited[q] = true;
                p = if q < 3 { q + 3 } else { q - 3 };
            }
        }
        loops
    }
}

/// The basis `1, e1, e2, e1e2, e2e1` in that order.
pub fn basis() -> &'static [Diagram; 5] {
    static BASIS: OnceLock<[Diagram; 5]> = OnceLock::new();
    BASIS.get_or_init(|| {
        let e1 = Diagram::generator(1);
        let e2 = Diagram::generator(2);
        [
            Diagram::identity(),
            e1,
            e2,
            e1.compose(&e2).0,
            e2.compose(&e1).0,
        ]
    })
}

fn basis_index(d: &Diagram) -> usize {
    basis()
        .iter()
        .position(|b| b == d)
        .expect("TL3 has exactly five diagrams")
}

/// `basis[i] · basis[j] = d^loops · basis[k]`, stored as `(k, loops)`.
fn structure_constants() -> &'static [[(usize, u32); 5]; 5] {
    static TABLE: OnceLock<[[(usize, u32); 5]; 5]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = basis();
        let mut table = [[(0, 0); 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                let (d, loops) = b[i].compose(&b[j]);
                table[i][j] = (basis_index(&d), loops);
            }
        }
        table
    })
}

/// Loop value `d = -A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, [(2, -1), (-2, -1)])
}

/// An element of TL₃ over `Z[A, A⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement {
    coeffs: [LaurentPoly; 5],
}

impl TlElement {
    pub fn zero() -> Self {
        TlElement {
            coeffs: std::array::from_fn(|_| LaurentPoly::zero(Var::A)),
        }
    }

    pub fn basis_element(i: usize, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.coeffs[i] = coeff;
        out
    }

    pub fn one() -> Self {
        Self::basis_element(0, LaurentPoly::one(Var::A))
    }

    /// `e_i` for `i ∈ {1, 2}`.
    pub fn e(i: u8) -> Self {
        Self::basis_element(i as usize, LaurentPoly::one(Var::A))
    }

    /// Coefficients over `1, e1, e2, e1e2, e2e1`.
    pub fn coeffs(&self) -> &[LaurentPoly; 5] {
        &self.coeffs
    }

    /// Kauffman skein image of `σ_i^{±1}`: `A + A⁻¹ e_i`, resp. `A⁻¹ + A e_i`.
    pub fn crossing(i: u8, sign: i64) -> Self {
        let a = LaurentPoly::monomial(Var::A, 1, sign);
        let a_inv = LaurentPoly::monomial(Var::A, 1, -sign);
        &Self::basis_element(0, a) + &Self::basis_element(i as usize, a_inv)
    }

    /// Closure trace: `Σ coeff · d^(loops - 1)`, normalized so one circle is 1.
    pub fn closure_trace(&self) -> LaurentPoly {
        let d = loop_value();
        let mut out = LaurentPoly::zero(Var::A);
        for (c, diagram) in self.coeffs.iter().zip(basis()) {
            out += &(c * &d.pow(diagram.closure_loops() - 1));
        }
        out
    }
}

impl Add for &TlElement {
    type Output = TlElement;

    fn add(self, rhs: &TlElement) -> TlElement {
        TlElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Mul for &TlElement {
    type Output = TlElement;

    fn mul(self, rhs: &TlElement) -> TlElement {
        let table = structure_constants();
        let d = loop_value();
        let mut out = TlElement::zero();
        for (row, a) in table.iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (&(k, loops), b) in row.iter().zip(&rhs.coeffs) {
                if b.is_zero() {
                    continue;
                }
                let term = &(a * b) * &d.pow(loops);
                out.coeffs[k] += &term;
            }
        }
        out
    }
}

impl Mul<&TlElement> for TlElement {
    type Output = TlElement;

    fn mul(self, rhs: &TlElement) -> TlElement {
        &self * rhs
    }
}

/// Multiplicative image of a braid word in TL₃ (`a3` goes through `σ1⁻¹σ2σ1`).
pub fn tl_image(word: &Word) -> TlElement {
    let gens = [
        [TlElement::crossing(1, 1), TlElement::crossing(1, -1)],
        [TlElement::crossing(2, 1), TlElement::crossing(2, -1)],
    ];
    word.to_classical()
        .letters()
        .fold(TlElement::one(), |acc, (s, sign)| {
            let g = &gens[s as usize - 1][if sign > 0 { 0 } else { 1 }];
            &acc * g
        })
}
