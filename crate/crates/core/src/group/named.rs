//! Standard permutation groups with fixed point labels.

use super::{GroupError, PermGroup, Permutation};

fn cycle_perm(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("distinct points")
}

fn group(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(degree, gens).expect("generators share the degree")
}

/// `S_n` on `0..n`, generated by `(0 1)` and `(0 1 ... n-1)`.
pub fn symmetric_group(n: usize) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("S_n needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(group(n, vec![cycle_perm(n, &[0, 1]), cycle_perm(n, &all)]))
}

/// `A_n` on `0..n`, generated by `(0 1 2)` and an `(n-1)`- or `n`-cycle of
/// even parity.
pub fn alternating_group(n: usize) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("A_n needs n >= 1".into()));
    }
    if n < 3 {
        return Ok(PermGroup::trivial(n));
    }
    let long: Vec<usize> = if n % 2 == 1 {
        (0..n).collect()
    } else {
        (1..n).collect()
    };
    Ok(group(
        n,
        vec![cycle_perm(n, &[0, 1, 2]), cycle_perm(n, &long)],
    ))
}

fn rotation(n: usize, step: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n).map(|i| (i + step) % n).collect())
}

fn check_cycle_length(n: usize, min: usize) -> Result<(), GroupError> {
    if n < min {
        return Err(GroupError::InvalidParameter(format!(
            "cycle group needs n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// `D_{2n}` acting on the vertices of `C_n`: the rotation `i -> i+1` and
/// the reflection `i -> -i`.
pub fn dihedral_group(n: usize) -> Result<PermGroup, GroupError> {
    check_cycle_length(n, 3)?;
    let reflection = Permutation::from_images_unchecked((0..n).map(|i| (n - i) % n).collect());
    Ok(group(n, vec![rotation(n, 1), reflection]))
}

/// The rotations of `C_n`.
pub fn cyclic_group(n: usize) -> Result<PermGroup, GroupError> {
    check_cycle_length(n, 1)?;
    Ok(group(n, vec![rotation(n, 1)]))
}

/// For even `n`, the index-2 subgroup of `D_{2n}` generated by `i -> i+2`
/// and `i -> 1-i`. It is vertex-transitive on `C_n` with two edge orbits.
pub fn half_dihedral_group(n: usize) -> Result<PermGroup, GroupError> {
    check_cycle_length(n, 4)?;
    if n % 2 == 1 {
        return Err(GroupError::InvalidParameter(format!("n = {n} is odd")));
    }
    let reflection = Permutation::from_images_unchecked((0..n).map(|i| (n + 1 - i) % n).collect());
    Ok(group(n, vec![rotation(n, 2), reflection]))
}

/// `S_n wr S_2` on `0..2n`, preserving the blocks `0..n` and `n..2n`: the
/// full automorphism group of `K_{n,n}`.
pub fn wreath_symmetric_2(n: usize) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(
            "S_n wr S_2 needs n >= 1".into(),
        ));
    }
    let degree = 2 * n;
    let swap = Permutation::from_images_unchecked((0..degree).map(|i| (i + n) % degree).collect());
    let mut gens = vec![swap];
    gens.extend(symmetric_group(n)?.generators().iter().map(|g| {
        let mut images = g.images().to_vec();
        images.extend(n..degree);
        Permutation::from_images_unchecked(images)
    }));
    Ok(group(degree, gens))
}

/// `S_m x S_n` on `0..m+n`, acting separately on `0..m` and `m..m+n`.
pub fn direct_product_symmetric(m: usize, n: usize) -> Result<PermGroup, GroupError> {
    let left = symmetric_group(m)?;
    let right = symmetric_group(n)?;
    let degree = m + n;
    let mut gens = Vec::new();
    for g in left.generators() {
        let mut images = g.images().to_vec();
        images.extend(m..degree);
        gens.push(Permutation::from_images_unchecked(images));
    }
    for g in right.generators() {
        let mut images: Vec<usize> = (0..m).collect();
        images.extend(g.images().iter().map(|&x| x + m));
        gens.push(Permutation::from_images_unchecked(images));
    }
    Ok(group(degree, gens))
}

/// GF(8) as bit polynomials over GF(2) modulo `x^3 + x + 1`.
mod gf8 {
    pub fn mul(a: usize, b: usize) -> usize {
        let mut product = 0;
        for i in 0..3 {
            if b >> i & 1 == 1 {
                product ^= a << i;
            }
        }
        for bit in [4, 3] {
            if product >> bit & 1 == 1 {
                product ^= 0b1011 << (bit - 3);
            }
        }
        product
    }

    pub fn inv(a: usize) -> usize {
        (1..8).find(|&b| mul(a, b) == 1).expect("non-zero element")
    }
}

/// Projective line over GF(8): point 0 is infinity, point `e + 1` is the
/// field element `e`.
fn projective_map(f: impl Fn(Option<usize>) -> Option<usize>) -> Permutation {
    let label = |x: Option<usize>| x.map_or(0, |e| e + 1);
    let images = (0..9)
        .map(|p| label(f(if p == 0 { None } else { Some(p - 1) })))
        .collect();
    Permutation::from_images(images).expect("projective map is a bijection")
}

fn pgl_generators() -> Vec<Permutation> {
    let translate = projective_map(|x| x.map(|e| e ^ 1));
    let scale = projective_map(|x| x.map(|e| gf8::mul(0b010, e)));
    let invert = projective_map(|x| match x {
        None => Some(0),
        Some(0) => None,
        Some(e) => Some(gf8::inv(e)),
    });
    vec![translate, scale, invert]
}

/// `PGL(2,8)` on the 9 points of the projective line, order 504.
pub fn pgl_2_8() -> PermGroup {
    let g = group(9, pgl_generators());
    assert_eq!(g.order(), 504, "PGL(2,8) self-check");
    g
}

/// `PGammaL(2,8)`: `PGL(2,8)` extended by the Frobenius map `x -> x^2`,
/// order 1512.
pub fn pgammal_2_8() -> PermGroup {
    let mut gens = pgl_generators();
    gens.push(projective_map(|x| x.map(|e| gf8::mul(e, e))));
    let g = group(9, gens);
    assert_eq!(g.order(), 1512, "PGammaL(2,8) self-check");
    g
}
