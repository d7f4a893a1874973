//! Two-sided braces on groups of nilpotency class at most 2.

use thiserror::Error;

use crate::brace::{BraceError, FiniteBrace};
use crate::group::CayleyGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("group has nilpotency class greater than 2")]
    ClassTooLarge,
    #[error("sum is not well defined for elements {a} and {b}")]
    NotWellDefined { a: usize, b: usize },
    #[error("decomposition invalid: {0}")]
    InvalidDecomposition(String),
    #[error("not a {p}-group")]
    NotPGroup { p: usize },
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("construction property fails: {0}")]
    Property(String),
    #[error(transparent)]
    Brace(#[from] BraceError),
}

fn check_class(g: &CayleyGroup) -> Result<usize, ConstructionError> {
    match g.nilpotency_class() {
        Some(c) if c <= 2 => Ok(c),
        _ => Err(ConstructionError::ClassTooLarge),
    }
}

/// The brace on `H = {g²z : g ∈ G, z ∈ Z(G)}` with multiplication from `G`
/// and `h₁²z₁ + h₂²z₂ = (h₁h₂)² z₁z₂ [h₂, h₁]`, where `[a, b] = a⁻¹b⁻¹ab`.
/// Elements of the result are the members of `H` in increasing index order.
pub fn class2_brace(g: &CayleyGroup) -> Result<(FiniteBrace, Vec<usize>), ConstructionError> {
    check_class(g)?;
    let n = g.order();
    let center = g.center();
    let zs: Vec<usize> = (0..n).filter(|&z| center[z]).collect();
    let mut reps: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for x in 0..n {
        let sq = g.op(x, x);
        for &z in &zs {
            reps[g.op(sq, z)].push((x, z));
        }
    }
    let member: Vec<bool> = reps.iter().map(|r| !r.is_empty()).collect();
    let (mul, elems) = g.restrict(&member);
    let mut pos = vec![usize::MAX; n];
    for (i, &a) in elems.iter().enumerate() {
        pos[a] = i;
    }
    let sum = |(h1, z1): (usize, usize), (h2, z2): (usize, usize)| {
        let hh = g.op(h1, h2);
        g.op(g.op(g.op(hh, hh), g.op(z1, z2)), g.commutator(h2, h1))
    };
    let m = elems.len();
    let mut table = vec![0; m * m];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            let value = sum(reps[a][0], reps[b][0]);
            let consistent = reps[a].iter().all(|&ra| reps[b].iter().all(|&rb| sum(ra, rb) == value));
            if !consistent || !member[value] {
                return Err(ConstructionError::NotWellDefined { a, b });
            }
            table[i * m + j] = pos[value];
        }
    }
    let add = CayleyGroup::from_fn(m, |i, j| table[i * m + j]).map_err(BraceError::Additive)?;
    let brace = FiniteBrace::from_groups(add, mul)?;
    if !brace.is_two_sided() {
        return Err(ConstructionError::Property("brace is not two-sided".into()));
    }
    if let Some(a) = (0..m).find(|&a| brace.lambda(a, a) != a) {
        return Err(ConstructionError::Property(format!("lambda_a(a) != a at {a}")));
    }
    let star = |a: usize, b: usize| brace.sub(brace.sub(brace.mul(a, b), a), b);
    let cube_zero = crate::brace::first_failing_triple(m, |a, b, c| star(star(a, b), c) != 0 || star(a, star(b, c)) != 0);
    if cube_zero.is_some() {
        return Err(ConstructionError::Property("H*H*H != 0".into()));
    }
    Ok((brace, elems))
}

/// The brace on `G` with `Z ≤ Z(G)` and `G/Z = ∏ ⟨a_i Z⟩` (direct, in the
/// order given): writing elements as `a_1^{m_1} ⋯ a_k^{m_k} z` with
/// `0 ≤ m_i < |a_i Z|`, exponents add and the central parts multiply.
pub fn ault_watters_brace(g: &CayleyGroup, z: &[usize], generators: &[usize]) -> Result<FiniteBrace, ConstructionError> {
    let bad = |s: &str| ConstructionError::InvalidDecomposition(s.into());
    check_class(g)?;
    let n = g.order();
    if z.iter().any(|&x| x >= n) || generators.iter().any(|&x| x >= n) {
        return Err(bad("element out of range"));
    }
    let mut in_z = vec![false; n];
    for &x in z {
        in_z[x] = true;
    }
    if !g.is_subgroup(&in_z) {
        return Err(bad("Z is not a subgroup"));
    }
    let center = g.center();
    if (0..n).any(|x| in_z[x] && !center[x]) {
        return Err(bad("Z is not central"));
    }
    let zs: Vec<usize> = (0..n).filter(|&x| in_z[x]).collect();
    let orders: Vec<usize> = generators
        .iter()
        .map(|&a| (1..=n).find(|&k| in_z[g.pow(a, k)]).unwrap())
        .collect();
    // normal form: exponents and central part, for each element
    let mut form: Vec<Option<(Vec<usize>, usize)>> = vec![None; n];
    let mut exps = vec![0; generators.len()];
    loop {
        let head = generators.iter().zip(&exps).fold(0, |acc, (&a, &e)| g.op(acc, g.pow(a, e)));
        for &c in &zs {
            let x = g.op(head, c);
            if form[x].is_some() {
                return Err(bad("normal form is not unique"));
            }
            form[x] = Some((exps.clone(), c));
        }
        let Some(i) = (0..exps.len()).rev().find(|&i| exps[i] + 1 < orders[i]) else {
            break;
        };
        exps[i] += 1;
        for e in exps.iter_mut().skip(i + 1) {
            *e = 0;
        }
    }
    let form: Vec<(Vec<usize>, usize)> = match form.into_iter().collect::<Option<Vec<_>>>() {
        Some(f) => f,
        None => return Err(bad("generators and Z do not cover G")),
    };
    let add = CayleyGroup::from_fn(n, |x, y| {
        let (ex, cx) = &form[x];
        let (ey, cy) = &form[y];
        let head = generators
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &a)| g.op(acc, g.pow(a, ex[i] + ey[i])));
        g.op(head, g.op(*cx, *cy))
    })
    .map_err(BraceError::Additive)?;
    let brace = FiniteBrace::from_groups(add, g.clone())?;
    if !brace.is_two_sided() {
        return Err(ConstructionError::Property("brace is not two-sided".into()));
    }
    if zs.iter().any(|&c| (0..n).any(|x| brace.lambda(c, x) != x)) {
        return Err(ConstructionError::Property("Z not inside the socle".into()));
    }
    Ok(brace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::group::named::*;

    #[test]
    fn abelian_input_gives_trivial_brace() {
        let g = cyclic(6);
        let (b, elems) = class2_brace(&g).unwrap();
        assert_eq!(elems, (0..6).collect::<Vec<_>>());
        assert_eq!(b, trivial_brace(&g).unwrap());
    }

    #[test]
    fn small_class_two_groups() {
        for g in [dihedral(4), quaternion()] {
            let (b, elems) = class2_brace(&g).unwrap();
            assert_eq!(elems.len(), 2);
            assert!(b.is_two_sided());
        }
    }

    #[test]
    fn heisenberg_mod_eight_gives_non_abelian_h() {
        let (b, elems) = class2_brace(&heisenberg(8)).unwrap();
        assert_eq!(elems.len(), 128);
        assert_eq!(b.multiplicative().nilpotency_class(), Some(2));
    }

    #[test]
    fn class_three_rejected() {
        assert_eq!(class2_brace(&dihedral(8)).unwrap_err(), ConstructionError::ClassTooLarge);
        assert_eq!(class2_brace(&symmetric(3)).unwrap_err(), ConstructionError::ClassTooLarge);
    }

    #[test]
    fn ault_watters_dihedral_and_quaternion() {
        // dihedral(4): s^f r^k at index 4f + k; quaternion: unit*2 + sign
        let d = ault_watters_brace(&dihedral(4), &[0, 2], &[1, 4]).unwrap();
        assert_eq!(d.order(), 8);
        let q = ault_watters_brace(&quaternion(), &[0, 1], &[2, 4]).unwrap();
        assert!(q.is_two_sided());
        assert!(ault_watters_brace(&dihedral(4), &[0, 1], &[1, 4]).is_err());
        assert!(ault_watters_brace(&dihedral(4), &[0, 2], &[1]).is_err());
    }
}
