//! The exceptional isomorphism `S_6 -> GSp_4(F_2)`, the class dictionary
//! between cycle types and mod-2 Euler polynomials, subgroup recognition, and
//! the symmetric cube `SL_2(F_4) -> GSp_4(F_4)`.

use crate::error::{Error, Result};
use crate::weil::EulerClassMod2;
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Permutation of `{1..6}`; `images[i]` is the image of `i + 1`, zero-based.
///
/// Products read left to right: `(s * t)(i) = t(s(i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm6 {
    images: [u8; 6],
}

impl Perm6 {
    pub const IDENTITY: Perm6 = Perm6 { images: [0, 1, 2, 3, 4, 5] };

    pub fn from_images(images: [u8; 6]) -> Result<Self> {
        let mut seen = [false; 6];
        for &i in &images {
            if i > 5 || seen[i as usize] {
                return Err(Error::InvalidInput(format!("{images:?} is not a bijection")));
            }
            seen[i as usize] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from cycles over `1..=6`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Result<Self> {
        let mut images = [0, 1, 2, 3, 4, 5];
        let mut touched = [false; 6];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if !(1..=6).contains(&x) || touched[x as usize - 1] {
                    return Err(Error::InvalidInput(format!("bad cycle {cycle:?}")));
                }
                touched[x as usize - 1] = true;
                images[x as usize - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// `sigma(i)` for `i` in `1..=6`.
    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1] + 1
    }

    pub fn images(&self) -> [u8; 6] {
        self.images
    }

    pub fn mul(&self, other: &Perm6) -> Perm6 {
        Perm6 { images: self.images.map(|i| other.images[i as usize]) }
    }

    pub fn inverse(&self) -> Perm6 {
        let mut inv = [0u8; 6];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm6 { images: inv }
    }

    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 6];
        let mut out = Vec::new();
        for start in 0..6 {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u8 + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(|c| c.len() as u8).collect())
    }

    pub fn order(&self) -> u32 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u32)
            .fold(1, |acc, n| acc / gcd(acc, n) * n)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn fixes(&self, i: u8) -> bool {
        self.apply(i) == i
    }

    /// All 720 elements in lexicographic order of images.
    pub fn all() -> Vec<Perm6> {
        let mut out = Vec::with_capacity(720);
        let mut cur = [0u8; 6];
        fn rec(depth: usize, used: u8, cur: &mut [u8; 6], out: &mut Vec<Perm6>) {
            if depth == 6 {
                out.push(Perm6 { images: *cur });
                return;
            }
            for i in 0..6u8 {
                if used & (1 << i) == 0 {
                    cur[depth] = i;
                    rec(depth + 1, used | (1 << i), cur, out);
                }
            }
        }
        rec(0, 0, &mut cur, &mut out);
        out
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Perm6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for x in c {
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for Perm6 {
    type Err = Error;

    /// Cycle notation such as `(123)(45)`, `(1 2 3)(4,5)` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse permutation '{s}'"));
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "()" {
            return Ok(Self::IDENTITY);
        }
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        let mut current: Option<Vec<u8>> = None;
        for ch in s.chars() {
            match ch {
                '(' if current.is_none() => current = Some(Vec::new()),
                ')' => cycles.push(current.take().ok_or_else(bad)?),
                '1'..='6' => current.as_mut().ok_or_else(bad)?.push(ch as u8 - b'0'),
                ' ' | ',' => {}
                _ => return Err(bad()),
            }
        }
        if current.is_some() {
            return Err(bad());
        }
        let refs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(&refs)
    }
}

/// A partition, parts sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType(Vec<u8>);

impl CycleType {
    pub fn new(mut parts: Vec<u8>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&p| p as u32).sum()
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().filter(|&&p| p == 1).count()
    }

    /// The seven partitions of 5.
    pub fn partitions_of_five() -> Vec<CycleType> {
        [&[1, 1, 1, 1, 1][..], &[2, 1, 1, 1], &[2, 2, 1], &[3, 1, 1], &[3, 2], &[4, 1], &[5]]
            .iter()
            .map(|p| CycleType::new(p.to_vec()))
            .collect()
    }

    /// A representative in `S_5 = Stab(6)`.
    pub fn representative(&self) -> Result<Perm6> {
        if self.degree() > 6 {
            return Err(Error::InvalidInput(format!("{self} is not a partition of at most 6")));
        }
        let mut next = 1u8;
        let mut cycles = Vec::new();
        for &p in &self.0 {
            cycles.push((next..next + p).collect::<Vec<u8>>());
            next += p;
        }
        let refs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm6::from_cycles(&refs)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// 4x4 matrix over `F_2`; bit `j` of `rows[i]` is the entry `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpMat4 {
    rows: [u8; 4],
}

impl SpMat4 {
    pub const IDENTITY: SpMat4 = SpMat4 { rows: [1, 2, 4, 8] };
    /// The antidiagonal form pairing `e1` with `e4` and `e2` with `e3`.
    pub const J: SpMat4 = SpMat4 { rows: [8, 4, 2, 1] };

    pub fn from_rows(m: [[u8; 4]; 4]) -> Self {
        let rows = m.map(|r| r.iter().enumerate().fold(0u8, |acc, (j, &x)| acc | ((x & 1) << j)));
        Self { rows }
    }

    pub fn to_rows(&self) -> [[u8; 4]; 4] {
        self.rows.map(|r| [0, 1, 2, 3].map(|j| (r >> j) & 1))
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> j) & 1
    }

    pub fn mul(&self, other: &SpMat4) -> SpMat4 {
        let rows = self.rows.map(|r| {
            (0..4).filter(|k| r >> k & 1 == 1).fold(0u8, |acc, k| acc ^ other.rows[k])
        });
        SpMat4 { rows }
    }

    pub fn transpose(&self) -> SpMat4 {
        let mut rows = [0u8; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..4 {
                *row |= self.get(j, i) << j;
            }
        }
        SpMat4 { rows }
    }

    pub fn is_symplectic(&self) -> bool {
        self.transpose().mul(&Self::J).mul(self) == Self::J
    }

    pub fn order(&self) -> u32 {
        let mut m = *self;
        for n in 1..=720 {
            if m == Self::IDENTITY {
                return n;
            }
            m = m.mul(self);
        }
        0
    }

    /// `det(t I + M)` over `F_2`, coefficients of `t^0..t^4`.
    pub fn charpoly_mod2(&self) -> [u8; 5] {
        // e_k is the sum of principal k-minors; signs vanish in characteristic 2
        let mut e = [0u8; 5];
        for subset in 0u8..16 {
            let idx: Vec<usize> = (0..4).filter(|i| subset >> i & 1 == 1).collect();
            e[idx.len()] ^= f2_det(&idx.iter().map(|&i| idx.iter().map(|&j| self.get(i, j)).collect()).collect::<Vec<Vec<u8>>>());
        }
        [e[4], e[3], e[2], e[1], 1]
    }

    /// Membership in the endoscopic subgroup: nonzero entries only at the four
    /// corners and in the central 2x2 block, with `xw - yz = ad - bc`.
    pub fn in_endoscopic(&self) -> bool {
        let outer_ok = self.rows[0] & 0b0110 == 0 && self.rows[3] & 0b0110 == 0;
        let inner_ok = self.rows[1] & 0b1001 == 0 && self.rows[2] & 0b1001 == 0;
        if !(outer_ok && inner_ok) {
            return false;
        }
        let (x, y, z, w) = (self.get(0, 0), self.get(0, 3), self.get(3, 0), self.get(3, 3));
        let (a, b, c, d) = (self.get(1, 1), self.get(1, 2), self.get(2, 1), self.get(2, 2));
        (x & w) ^ (y & z) == (a & d) ^ (b & c)
    }
}

fn f2_det(m: &[Vec<u8>]) -> u8 {
    let n = m.len();
    let mut rows: Vec<u8> = m
        .iter()
        .map(|r| r.iter().enumerate().fold(0u8, |acc, (j, &x)| acc | (x << j)))
        .collect();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| rows[r] >> col & 1 == 1) else {
            return 0;
        };
        rows.swap(col, piv);
        for r in col + 1..n {
            if rows[r] >> col & 1 == 1 {
                rows[r] ^= rows[col];
            }
        }
    }
    1
}

impl fmt::Display for SpMat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Basis of `W = U^perp / U` inside `F_2^6` (bit `i` is coordinate `i + 1`),
/// `U` spanned by the all-ones vector.
pub const W_BASIS: [u8; 4] = [0b000011, 0b011000, 0b101000, 0b000101];
const ALL_ONES: u8 = 0b111111;

fn w_coordinates(v: u8) -> u8 {
    for c in 0u8..16 {
        let w = (0..4).filter(|j| c >> j & 1 == 1).fold(0u8, |acc, j| acc ^ W_BASIS[j]);
        if w == v || w ^ ALL_ONES == v {
            return c;
        }
    }
    unreachable!("odd-weight vector {v:06b}")
}

/// Matrix of `sigma` on `W`, acting by `(x_1..x_6) -> (x_sigma(1)..x_sigma(6))`.
/// With left-to-right products this is a homomorphism.
pub fn phi(sigma: &Perm6) -> SpMat4 {
    let mut rows = [0u8; 4];
    for (j, &v) in W_BASIS.iter().enumerate() {
        let moved = (0..6).fold(0u8, |acc, i| acc | (((v >> sigma.images[i]) & 1) << i));
        let c = w_coordinates(moved);
        for (i, row) in rows.iter_mut().enumerate() {
            *row |= ((c >> i) & 1) << j;
        }
    }
    SpMat4 { rows }
}

/// Class of a Frobenius cycle type in `S_5` via `phi`.
pub fn cycle_type_to_class(ct: &CycleType) -> Result<EulerClassMod2> {
    if ct.degree() != 5 {
        return Err(Error::InvalidInput(format!("{ct} is not a partition of 5")));
    }
    let f = phi(&ct.representative()?).charpoly_mod2();
    EulerClassMod2::from_f2_coeffs(f)
        .ok_or_else(|| Error::InvalidInput(format!("charpoly {f:?} outside the four classes")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    C5,
    D10,
    F20,
    A5,
    S5,
    A6,
    S6,
    #[serde(rename = "OTHER")]
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupVerdict {
    pub tag: GroupTag,
    pub order: usize,
    pub abelian: bool,
    pub has33: bool,
}

/// Closes `generators` under multiplication.
pub fn subgroup_closure(generators: &[Perm6]) -> Result<Vec<Perm6>> {
    let mut seen: HashSet<Perm6> = HashSet::from([Perm6::IDENTITY]);
    let mut queue = VecDeque::from([Perm6::IDENTITY]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.mul(s);
            if seen.insert(h) {
                if seen.len() > 720 {
                    return Err(Error::InvalidInput("closure exceeded 720 elements".into()));
                }
                queue.push_back(h);
            }
        }
    }
    let mut out: Vec<Perm6> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

pub fn classify_subgroup(generators: &[Perm6]) -> Result<SubgroupVerdict> {
    let group = subgroup_closure(generators)?;
    let order = group.len();
    let abelian = generators.iter().all(|a| generators.iter().all(|b| a.mul(b) == b.mul(a)));
    let has33 = group.iter().any(|g| g.cycle_type().parts() == [3, 3]);
    let all_even = group.iter().all(|g| g.is_even());
    // in S_6 a subgroup of order divisible by 5 is determined up to
    // isomorphism by its order; the parity test separates A_n from S_n
    let tag = match (order, abelian, all_even) {
        (5, true, _) => GroupTag::C5,
        (10, false, _) => GroupTag::D10,
        (20, false, _) => GroupTag::F20,
        (60, false, true) => GroupTag::A5,
        (120, false, false) => GroupTag::S5,
        (360, false, true) => GroupTag::A6,
        (720, false, false) => GroupTag::S6,
        _ => GroupTag::Other,
    };
    Ok(SubgroupVerdict { tag, order, abelian, has33 })
}

// ---- F_4 and the symmetric cube ------------------------------------------

/// `F_4 = F_2[a]/(a^2 + a + 1)`; codes `0, 1, 2 = a, 3 = a^2 = a + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F4(pub u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const A: F4 = F4(2);
    pub const A2: F4 = F4(3);
    pub const ALL: [F4; 4] = [F4(0), F4(1), F4(2), F4(3)];

    pub fn add(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }

    pub fn mul(self, o: F4) -> F4 {
        if self.0 == 0 || o.0 == 0 {
            return F4::ZERO;
        }
        // log: 1 -> 0, a -> 1, a^2 -> 2
        let log = |x: u8| x - 1;
        F4([1, 2, 3][((log(self.0) + log(o.0)) % 3) as usize])
    }

    pub fn pow(self, e: u32) -> F4 {
        (0..e).fold(F4::ONE, |acc, _| acc.mul(self))
    }

    pub fn is_f2(self) -> bool {
        self.0 < 2
    }
}

pub type Mat2F4 = [[F4; 2]; 2];
pub type Mat4F4 = [[F4; 4]; 4];

pub fn det2(m: &Mat2F4) -> F4 {
    m[0][0].mul(m[1][1]).add(m[0][1].mul(m[1][0]))
}

pub fn mul2(x: &Mat2F4, y: &Mat2F4) -> Mat2F4 {
    let mut out = [[F4::ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = x[i][0].mul(y[0][j]).add(x[i][1].mul(y[1][j]));
        }
    }
    out
}

pub fn mul4(x: &Mat4F4, y: &Mat4F4) -> Mat4F4 {
    let mut out = [[F4::ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..4).fold(F4::ZERO, |acc, k| acc.add(x[i][k].mul(y[k][j])));
        }
    }
    out
}

pub fn transpose4(x: &Mat4F4) -> Mat4F4 {
    let mut out = [[F4::ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = x[j][i];
        }
    }
    out
}

pub fn identity4() -> Mat4F4 {
    let mut out = [[F4::ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = F4::ONE;
    }
    out
}

pub fn antidiagonal4() -> Mat4F4 {
    let mut out = [[F4::ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[3 - i] = F4::ONE;
    }
    out
}

/// All 60 elements of `SL_2(F_4)`.
pub fn sl2f4() -> Vec<Mat2F4> {
    let mut out = Vec::with_capacity(60);
    for a in F4::ALL {
        for b in F4::ALL {
            for c in F4::ALL {
                for d in F4::ALL {
                    let m = [[a, b], [c, d]];
                    if det2(&m) == F4::ONE {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// `Sym^3` on the basis `X^3, X^2 Y, X Y^2, Y^3`, with `m` acting on column
/// vectors (`X -> m00 X + m10 Y`, `Y -> m01 X + m11 Y`).
pub fn sym3_sl2f4(m: &Mat2F4) -> Result<Mat4F4> {
    if det2(m) != F4::ONE {
        return Err(Error::InvalidInput("sym3 needs a determinant-one matrix".into()));
    }
    let gx = [m[0][0], m[1][0]];
    let gy = [m[0][1], m[1][1]];
    let lin_mul = |p: &[F4], l: &[F4; 2]| -> Vec<F4> {
        let mut out = vec![F4::ZERO; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            out[i] = out[i].add(c.mul(l[0]));
            out[i + 1] = out[i + 1].add(c.mul(l[1]));
        }
        out
    };
    let mut out = [[F4::ZERO; 4]; 4];
    for j in 0..4 {
        // coefficients of X^{3-i} Y^i in gx^{3-j} gy^j
        let mut poly = vec![F4::ONE];
        for _ in 0..3 - j {
            poly = lin_mul(&poly, &gx);
        }
        for _ in 0..j {
            poly = lin_mul(&poly, &gy);
        }
        for (i, row) in out.iter_mut().enumerate() {
            row[j] = poly[i];
        }
    }
    Ok(out)
}

fn f4_det(m: &[Vec<F4>]) -> F4 {
    match m.len() {
        0 => F4::ONE,
        1 => m[0][0],
        n => (0..n).fold(F4::ZERO, |acc, j| {
            let minor: Vec<Vec<F4>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
                .collect();
            acc.add(m[0][j].mul(f4_det(&minor)))
        }),
    }
}

/// `det(t I + M)` over `F_4`, coefficients of `t^0..t^4`.
pub fn charpoly_f4(m: &Mat4F4) -> [F4; 5] {
    let mut e = [F4::ZERO; 5];
    for subset in 0u8..16 {
        let idx: Vec<usize> = (0..4).filter(|i| subset >> i & 1 == 1).collect();
        let sub: Vec<Vec<F4>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect();
        e[idx.len()] = e[idx.len()].add(f4_det(&sub));
    }
    [e[4], e[3], e[2], e[1], F4::ONE]
}

/// The charpoly as an `F_2` quartic, or `None` if a coefficient lies outside `F_2`.
pub fn charpoly_f4_over_f2(m: &Mat4F4) -> Option<[u8; 5]> {
    let c = charpoly_f4(m);
    c.iter().all(|x| x.is_f2()).then(|| c.map(|x| x.0))
}

pub fn order2(m: &Mat2F4) -> u32 {
    let id = [[F4::ONE, F4::ZERO], [F4::ZERO, F4::ONE]];
    let mut x = *m;
    for n in 1..=60 {
        if x == id {
            return n;
        }
        x = mul2(&x, m);
    }
    0
}

/// Order-5 class representatives `(0 1; 1 a)` and `(0 1; 1 a^2)` of `SL_2(F_4)`.
pub fn order5_representatives() -> [Mat2F4; 2] {
    [[[F4::ZERO, F4::ONE], [F4::ONE, F4::A]], [[F4::ZERO, F4::ONE], [F4::ONE, F4::A2]]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm6 {
        s.parse().unwrap()
    }

    fn m(rows: [[u8; 4]; 4]) -> SpMat4 {
        SpMat4::from_rows(rows)
    }

    #[test]
    fn perm_parsing_and_product() {
        let s = p("(123)");
        assert_eq!(s.apply(1), 2);
        assert_eq!(s.apply(3), 1);
        assert_eq!(p("(1 2)(3,4)").cycle_type().parts(), &[2, 2, 1, 1]);
        // left to right: first (12), then (23): 1 -> 2 -> 3
        assert_eq!(p("(12)").mul(&p("(23)")).apply(1), 3);
        assert_eq!(p("(25463)").to_string(), "(25463)");
        assert!("(17)".parse::<Perm6>().is_err());
        assert!("(121)".parse::<Perm6>().is_err());
        assert_eq!(p("(1234)").order(), 4);
        assert_eq!(p("(123)(45)").order(), 6);
    }

    #[test]
    fn phi_identity() {
        assert_eq!(phi(&Perm6::IDENTITY), SpMat4::IDENTITY);
    }

    #[test]
    fn phi_reproduces_displayed_s5_matrices() {
        let table = [
            ("(12)", [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
            ("(12)(34)", [[1, 1, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1], [0, 0, 0, 1]]),
            ("(123)", [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]]),
            ("(123)(45)", [[0, 0, 0, 1], [0, 1, 1, 0], [0, 0, 1, 0], [1, 0, 0, 1]]),
            ("(1234)", [[1, 1, 1, 0], [1, 0, 1, 1], [1, 1, 0, 1], [1, 0, 0, 1]]),
            ("(12345)", [[1, 1, 1, 0], [0, 1, 1, 0], [1, 1, 0, 1], [1, 0, 0, 1]]),
        ];
        for (s, rows) in table {
            assert_eq!(phi(&p(s)), m(rows), "{s}");
        }
    }

    #[test]
    fn charpolys_of_class_representatives() {
        assert_eq!(phi(&p("(12345)")).charpoly_mod2(), [1, 1, 1, 1, 1]);
        assert_eq!(phi(&p("(123)")).charpoly_mod2(), [1, 1, 0, 1, 1]);
        assert_eq!(phi(&p("(123)(456)")).charpoly_mod2(), [1, 0, 1, 0, 1]);
        assert_eq!(phi(&p("(12)(34)")).charpoly_mod2(), [1, 0, 0, 0, 1]);
    }

    #[test]
    fn class_dictionary() {
        use EulerClassMod2::*;
        let expect = [
            (vec![1, 1, 1, 1, 1], OneT4),
            (vec![2, 1, 1, 1], OneT4),
            (vec![2, 2, 1], OneT4),
            (vec![4, 1], OneT4),
            (vec![3, 1, 1], T3T4),
            (vec![3, 2], T3T4),
            (vec![5], Cyclotomic5),
        ];
        for (parts, class) in expect {
            assert_eq!(cycle_type_to_class(&CycleType::new(parts)).unwrap(), class);
        }
        assert!(cycle_type_to_class(&CycleType::new(vec![3, 3])).is_err());
    }

    #[test]
    fn d10_generators() {
        assert_eq!(phi(&p("(23)(56)")), SpMat4::J);
        assert_eq!(phi(&p("(25463)")), m([[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 0, 0], [1, 1, 0, 1]]));
        let v = classify_subgroup(&[p("(23)(56)"), p("(25463)")]).unwrap();
        assert_eq!((v.tag, v.order), (GroupTag::D10, 10));
    }

    #[test]
    fn subgroup_examples() {
        let f20 = classify_subgroup(&[p("(12345)"), p("(1243)")]).unwrap();
        assert_eq!((f20.tag, f20.order, f20.has33), (GroupTag::F20, 20, false));
        assert_eq!(p("(1243)").mul(&p("(1243)")), p("(14)(23)"));
        let s5 = classify_subgroup(&[p("(12345)"), p("(12)")]).unwrap();
        assert_eq!((s5.tag, s5.order), (GroupTag::S5, 120));
        let c5 = classify_subgroup(&[p("(12345)")]).unwrap();
        assert_eq!(c5.tag, GroupTag::C5);
        let s6 = classify_subgroup(&[p("(123456)"), p("(12)")]).unwrap();
        assert_eq!((s6.tag, s6.has33), (GroupTag::S6, true));
        let a6 = classify_subgroup(&[p("(12345)"), p("(123)(456)"), p("(12)(34)")]).unwrap();
        assert_eq!(a6.tag, GroupTag::A6);
        assert_eq!(classify_subgroup(&[p("(12)")]).unwrap().tag, GroupTag::Other);
    }

    #[test]
    fn displayed_order_three_matrix() {
        let x = m([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]);
        assert!(x.is_symplectic());
        assert_eq!(x.order(), 3);
        assert!(x.in_endoscopic());
    }

    #[test]
    fn endoscopic_subgroup_is_s3_times_s3() {
        let s3s3: HashSet<SpMat4> = Perm6::all()
            .iter()
            .filter(|s| (1..=3).all(|i| s.apply(i) <= 3))
            .map(phi)
            .collect();
        assert_eq!(s3s3.len(), 36);
        let h: HashSet<SpMat4> = Perm6::all().iter().map(phi).filter(|x| x.in_endoscopic()).collect();
        assert_eq!(h, s3s3);
    }

    #[test]
    fn f4_field_axioms() {
        for x in F4::ALL {
            assert_eq!(x.add(x), F4::ZERO);
            if x != F4::ZERO {
                assert_eq!(x.pow(3), F4::ONE);
            }
        }
        assert_eq!(F4::A.mul(F4::A), F4::A2);
        assert_eq!(F4::A.add(F4::ONE), F4::A2);
    }

    #[test]
    fn sl2f4_has_order_sixty() {
        assert_eq!(sl2f4().len(), 60);
        for g in order5_representatives() {
            assert_eq!(det2(&g), F4::ONE);
            assert_eq!(order2(&g), 5);
        }
    }

    #[test]
    fn sym3_identity_and_rejection() {
        let id = [[F4::ONE, F4::ZERO], [F4::ZERO, F4::ONE]];
        assert_eq!(sym3_sl2f4(&id).unwrap(), identity4());
        let bad = [[F4::ONE, F4::ZERO], [F4::ONE, F4::A]];
        assert!(sym3_sl2f4(&bad).is_err());
    }

    #[test]
    fn sym3_of_order_five_is_cyclotomic() {
        for g in order5_representatives() {
            let s = sym3_sl2f4(&g).unwrap();
            assert_eq!(charpoly_f4_over_f2(&s), Some([1, 1, 1, 1, 1]));
        }
    }
}
