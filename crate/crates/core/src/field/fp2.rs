//! F_{p²} = F_p(√N) for a fixed non-residue N, and the projective line over
//! it. Used by the structural SL₂ generation test to locate eigenlines.

use super::{add_mod, inv_mod, mul_mod, non_residue, sqrt_mod, sub_mod, FpMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Fp2 {
    re: u32,
    im: u32,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp2Ctx {
    p: u32,
    nr: u32,
}

impl Fp2Ctx {
    pub(crate) fn new(p: u32) -> Self {
        assert!(p > 2, "F_p² context needs an odd prime");
        Self {
            p,
            nr: non_residue(p),
        }
    }

    pub(crate) fn embed(&self, a: u32) -> Fp2 {
        Fp2 { re: a % self.p, im: 0 }
    }

    pub(crate) fn add(&self, a: Fp2, b: Fp2) -> Fp2 {
        Fp2 {
            re: add_mod(a.re, b.re, self.p),
            im: add_mod(a.im, b.im, self.p),
        }
    }

    pub(crate) fn sub(&self, a: Fp2, b: Fp2) -> Fp2 {
        Fp2 {
            re: sub_mod(a.re, b.re, self.p),
            im: sub_mod(a.im, b.im, self.p),
        }
    }

    pub(crate) fn mul(&self, a: Fp2, b: Fp2) -> Fp2 {
        let p = self.p;
        let ii = mul_mod(mul_mod(a.im, b.im, p), self.nr, p);
        Fp2 {
            re: add_mod(mul_mod(a.re, b.re, p), ii, p),
            im: add_mod(mul_mod(a.re, b.im, p), mul_mod(a.im, b.re, p), p),
        }
    }

    pub(crate) fn inv(&self, a: Fp2) -> Option<Fp2> {
        // (re + im·ω)⁻¹ = (re − im·ω) / (re² − N·im²)
        let p = self.p;
        let norm = sub_mod(
            mul_mod(a.re, a.re, p),
            mul_mod(self.nr, mul_mod(a.im, a.im, p), p),
            p,
        );
        let ninv = inv_mod(norm, p)?;
        Some(Fp2 {
            re: mul_mod(a.re, ninv, p),
            im: mul_mod(sub_mod(0, a.im, p), ninv, p),
        })
    }

    /// A square root in F_{p²} of an element of the prime field.
    pub(crate) fn sqrt_base(&self, d: u32) -> Fp2 {
        if let Some(s) = sqrt_mod(d, self.p) {
            return Fp2 { re: s, im: 0 };
        }
        // d/N is a square, so √d = √(d/N)·ω.
        let q = mul_mod(d, inv_mod(self.nr, self.p).expect("nonzero"), self.p);
        Fp2 {
            re: 0,
            im: sqrt_mod(q, self.p).expect("d/N is a residue"),
        }
    }

    /// Möbius action of a 2×2 matrix on P¹(F_{p²}), column-vector convention.
    pub(crate) fn act(&self, g: &FpMatrix, z: P1Point) -> P1Point {
        let (a, b, c, d) = (
            self.embed(g.at(0, 0)),
            self.embed(g.at(0, 1)),
            self.embed(g.at(1, 0)),
            self.embed(g.at(1, 1)),
        );
        let (num, den) = match z {
            P1Point::Infinity => (a, c),
            P1Point::Finite(z) => (self.add(self.mul(a, z), b), self.add(self.mul(c, z), d)),
        };
        match self.inv(den) {
            Some(di) => P1Point::Finite(self.mul(num, di)),
            None => P1Point::Infinity,
        }
    }

    /// Fixed points of a non-scalar 2×2 matrix, i.e. its eigenlines over F_{p²}.
    pub(crate) fn fixed_points(&self, g: &FpMatrix) -> Vec<P1Point> {
        let p = self.p;
        let (a, b, c, d) = (g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1));
        if c == 0 {
            let mut pts = vec![P1Point::Infinity];
            if a != d {
                let z = mul_mod(b, inv_mod(sub_mod(d, a, p), p).expect("a ≠ d"), p);
                pts.push(P1Point::Finite(self.embed(z)));
            }
            return pts;
        }
        // c z² + (d − a) z − b = 0
        let amd = sub_mod(a, d, p);
        let disc = add_mod(mul_mod(amd, amd, p), mul_mod(4 % p, mul_mod(b, c, p), p), p);
        let root = self.sqrt_base(disc);
        let inv2c = self.embed(inv_mod(mul_mod(2, c, p), p).expect("c ≠ 0"));
        let base = self.embed(amd);
        let z1 = self.mul(self.add(base, root), inv2c);
        let z2 = self.mul(self.sub(base, root), inv2c);
        if z1 == z2 {
            vec![P1Point::Finite(z1)]
        } else {
            vec![P1Point::Finite(z1), P1Point::Finite(z2)]
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum P1Point {
    Finite(Fp2),
    Infinity,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        let ctx = Fp2Ctx::new(7);
        for re in 0..7 {
            for im in 0..7 {
                let x = Fp2 { re, im };
                if re == 0 && im == 0 {
                    assert!(ctx.inv(x).is_none());
                    continue;
                }
                let y = ctx.inv(x).unwrap();
                assert_eq!(ctx.mul(x, y), ctx.embed(1));
            }
        }
        for d in 0..7 {
            let r = ctx.sqrt_base(d);
            assert_eq!(ctx.mul(r, r), ctx.embed(d));
        }
    }

    #[test]
    fn fixed_points_are_fixed() {
        let ctx = Fp2Ctx::new(11);
        for e in [[2, 3, 1, 2], [0, 10, 1, 0], [1, 1, 0, 1], [3, 0, 0, 4], [1, 0, 5, 1]] {
            let g = FpMatrix::new(11, 2, &e).unwrap();
            let pts = ctx.fixed_points(&g);
            assert!(!pts.is_empty());
            for z in pts {
                assert_eq!(ctx.act(&g, z), z);
            }
        }
    }
}
