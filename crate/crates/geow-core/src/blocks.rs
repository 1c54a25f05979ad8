//! Builtin blocks: the closed 4-manifolds a construction starts from.
//!
//! Every block arrives normalized, with its invariants, fundamental group
//! status, spin status, and an inventory of marked surfaces for the
//! cut-and-paste operations to consume. [`block`] builds one by name;
//! [`manifest`] lists the registry in a versioned text format.

use num_bigint::BigInt;
use num_integer::Roots;

use crate::cover;
use crate::manifold::{ManifoldClass, Minimal, OpError, Pi1, Spin, Surface, SurfaceKind};

/// First line of the [`manifest`] listing; bump on format changes.
pub const MANIFEST_VERSION: &str = "geow-blocks/1";

/// Registry row: callable name, parameter names, one-line description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

/// Callable blocks in manifest order.
pub const REGISTRY: &[BlockInfo] = &[
    BlockInfo { name: "CP2", params: "", summary: "projective plane, e=3 sigma=1" },
    BlockInfo {
        name: "mCP2",
        params: "",
        summary: "reversed-orientation projective plane, e=3 sigma=-1",
    },
    BlockInfo { name: "S4", params: "", summary: "4-sphere, e=2 sigma=0" },
    BlockInfo { name: "S2xS2", params: "", summary: "product of two spheres, e=4 sigma=0" },
    BlockInfo { name: "T4", params: "", summary: "4-torus, e=0 sigma=0" },
    BlockInfo {
        name: "T2xT2",
        params: "",
        summary: "4-torus carrying dual symplectic tori Ta, Tb meeting once",
    },
    BlockInfo {
        name: "SigmaxSigma",
        params: "g h",
        summary: "product of genus g and genus h surfaces; factors Sg, Sh meet once",
    },
    BlockInfo {
        name: "EnK",
        params: "n g",
        summary: "knot-surgered elliptic surface, needs n = p^2 and g = 1 + p(p+3)/2 \
                  for one p >= 3; section SK has square -n and simply connected complement",
    },
    BlockInfo {
        name: "FPP_H",
        params: "p",
        summary: "fake projective plane with a divisor H of genus 1 + p(p+3)/2 and \
                  square p^2 whose fundamental group surjects, p >= 3",
    },
    BlockInfo {
        name: "X_gg2",
        params: "g",
        summary: "simply connected signature -2 member with chi = g; carries S (genus 2, \
                  square 0), S1/S2 (genus g, square -1) and SG1 (genus g+1, square 0) all \
                  meeting S once, plus disjoint Lagrangian tori L1/L2 when g >= 2",
    },
    BlockInfo {
        name: "X_gg1",
        params: "g",
        summary: "simply connected signature -1 member with chi = g; carries S (genus 2, \
                  square 0) and SG1 (genus g+1, square 0) meeting S once, plus E2 (genus 2, \
                  square -1) meeting S twice when g = 1",
    },
    BlockInfo {
        name: "Y_n",
        params: "n m",
        summary: "surgered product of genus 2 and genus n surfaces, e=4n-4 sigma=0, \
                  symplectic only at multiplicity m = 1; Sigma2 and Sigman meet once",
    },
    BlockInfo {
        name: "Y_n1",
        params: "n m",
        summary: "surgered product of a genus n surface and a torus, e=0 sigma=0, \
                  symplectic only at multiplicity m = 1; Sigman and T meet once",
    },
    BlockInfo {
        name: "Z_n",
        params: "n m",
        summary: "surgered product of genus 3 and genus n surfaces, e=8n-8 sigma=0, \
                  symplectic only at multiplicity m = 1; Sigma3 and Sigman meet once",
    },
    BlockInfo {
        name: "M_n",
        params: "n",
        summary: "minimal general type family on the line c1^2 = 9 chi, e=3n sigma=n",
    },
    BlockInfo {
        name: "Mtilde",
        params: "",
        summary: "four-sheeted cover of a minimal general type surface, e=12 sigma=4; \
                  carries a nodal genus 4 divisor E of square -1 whose group surjects",
    },
    BlockInfo {
        name: "M2",
        params: "",
        summary: "double cover of the same surface, e=6 sigma=2; its divisor E maps to \
                  an index two subgroup, so the group does not surject",
    },
    BlockInfo {
        name: "W",
        params: "",
        summary: "abelian cover branched over a line arrangement, e=48 sigma=16; carries \
                  Sigma9 (genus 9, square +1, group surjects) and SE6 (genus 2, square -1)",
    },
];

/// Versioned text listing of every callable block.
pub fn manifest() -> String {
    let mut out = String::from(MANIFEST_VERSION);
    out.push('\n');
    for info in REGISTRY {
        out.push_str(&format!("{}({}): {}\n", info.name, info.params, info.summary));
    }
    out
}

/// Builds the named block. Parameters are positional integers; blocks
/// without parameters take an empty slice. The result comes normalized.
pub fn block(name: &str, params: &[i64]) -> Result<ManifoldClass, OpError> {
    let mut m = match name {
        "CP2" => {
            arity(name, params, 0)?;
            cp2()
        }
        "mCP2" => {
            arity(name, params, 0)?;
            mcp2()
        }
        "S4" => {
            arity(name, params, 0)?;
            s4()
        }
        "S2xS2" => {
            arity(name, params, 0)?;
            s2xs2()
        }
        "T4" => {
            arity(name, params, 0)?;
            t4()
        }
        "T2xT2" => {
            arity(name, params, 0)?;
            t2xt2()
        }
        "SigmaxSigma" => {
            arity(name, params, 2)?;
            sigma_x_sigma(params[0], params[1])?
        }
        "EnK" => {
            arity(name, params, 2)?;
            enk(params[0], params[1])?
        }
        "FPP_H" => {
            arity(name, params, 1)?;
            fpp_h(params[0])?
        }
        "X_gg2" => {
            arity(name, params, 1)?;
            x_gg2(params[0])?
        }
        "X_gg1" => {
            arity(name, params, 1)?;
            x_gg1(params[0])?
        }
        "Y_n" => {
            arity(name, params, 2)?;
            y_n(params[0], params[1])?
        }
        "Y_n1" => {
            arity(name, params, 2)?;
            y_n1(params[0], params[1])?
        }
        "Z_n" => {
            arity(name, params, 2)?;
            z_n(params[0], params[1])?
        }
        "M_n" => {
            arity(name, params, 1)?;
            m_n(params[0])?
        }
        "Mtilde" => {
            arity(name, params, 0)?;
            mtilde()
        }
        "M2" => {
            arity(name, params, 0)?;
            m2()
        }
        "W" => {
            arity(name, params, 0)?;
            cover::hesse_w_block()
        }
        other => return Err(OpError::UnknownBlock(other.to_string())),
    };
    m.normalize();
    Ok(m)
}

fn arity(name: &str, params: &[i64], want: usize) -> Result<(), OpError> {
    if params.len() == want {
        Ok(())
    } else {
        Err(OpError::BadBlockParams(format!(
            "{name} takes {want} parameter(s), got {}",
            params.len()
        )))
    }
}

fn add(m: &mut ManifoldClass, s: Surface) {
    m.add_surface(s).expect("builtin surface ids are distinct");
}

fn meet(m: &mut ManifoldClass, a: &str, b: &str, count: u64) {
    m.record_intersection(a, b, count).expect("builtin surfaces are present");
}

fn cp2() -> ManifoldClass {
    ManifoldClass::new(3, 1)
        .with_pi1(Pi1::Trivial)
        .with_spin(Spin::NonSpin)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note("projective plane")
}

fn mcp2() -> ManifoldClass {
    ManifoldClass::new(3, -1)
        .with_pi1(Pi1::Trivial)
        .with_spin(Spin::NonSpin)
        .with_note("reversed-orientation projective plane")
}

fn s4() -> ManifoldClass {
    ManifoldClass::new(2, 0)
        .with_pi1(Pi1::Trivial)
        .with_spin(Spin::Spin)
        .with_note("4-sphere")
}

fn s2xs2() -> ManifoldClass {
    ManifoldClass::new(4, 0)
        .with_pi1(Pi1::Trivial)
        .with_spin(Spin::Spin)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note("product of two spheres")
}

fn t4() -> ManifoldClass {
    ManifoldClass::new(0, 0)
        .with_b1(4)
        .with_pi1(Pi1::Presented("free abelian of rank 4".to_string()))
        .with_spin(Spin::Spin)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note("4-torus")
}

fn t2xt2() -> ManifoldClass {
    let mut m = t4().with_note("dual coordinate tori marked");
    add(&mut m, Surface::new("Ta", 1, 0, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("Tb", 1, 0, SurfaceKind::Symplectic));
    meet(&mut m, "Ta", "Tb", 1);
    m
}

fn sigma_x_sigma(g: i64, h: i64) -> Result<ManifoldClass, OpError> {
    if g < 0 || h < 0 {
        return Err(OpError::BadBlockParams(format!(
            "SigmaxSigma needs g >= 0 and h >= 0, got ({g}, {h})"
        )));
    }
    let e = (BigInt::from(2) - BigInt::from(2) * g) * (BigInt::from(2) - BigInt::from(2) * h);
    let pi1 = if g == 0 && h == 0 {
        Pi1::Trivial
    } else {
        Pi1::Presented(format!("product of genus {g} and genus {h} surface groups"))
    };
    let mut m = ManifoldClass::new(e, 0)
        .with_b1(BigInt::from(2) * g + BigInt::from(2) * h)
        .with_pi1(pi1)
        .with_spin(Spin::Spin)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note(format!("product of closed genus {g} and genus {h} surfaces"));
    add(&mut m, Surface::new("Sg", g, 0, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("Sh", h, 0, SurfaceKind::Symplectic));
    meet(&mut m, "Sg", "Sh", 1);
    Ok(m)
}

fn enk(n: i64, g: i64) -> Result<ManifoldClass, OpError> {
    if n < 9 {
        return Err(OpError::BadBlockParams(format!(
            "EnK needs n = p^2 for some p >= 3, got n = {n}"
        )));
    }
    let p = n.sqrt();
    if p * p != n || p < 3 {
        return Err(OpError::BadBlockParams(format!(
            "EnK needs n = p^2 for some p >= 3, got n = {n}"
        )));
    }
    let want = 1 + (p as i128) * ((p as i128) + 3) / 2;
    if i128::from(g) != want {
        return Err(OpError::BadBlockParams(format!(
            "EnK genus must be 1 + p(p+3)/2 = {want} for p = {p}, got {g}"
        )));
    }
    let spin = if n % 2 == 0 { Spin::Spin } else { Spin::NonSpin };
    let mut m = ManifoldClass::new(BigInt::from(12) * n, BigInt::from(-8) * n)
        .with_pi1(Pi1::Trivial)
        .with_spin(spin)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note(format!(
            "elliptic surface of fiber degree {n} surgered along a genus {g} fibered knot"
        ));
    add(
        &mut m,
        Surface::new("SK", g, -n, SurfaceKind::Symplectic).with_complement_simply_connected(true),
    );
    Ok(m)
}

fn fpp_h(p: i64) -> Result<ManifoldClass, OpError> {
    if p < 3 {
        return Err(OpError::BadBlockParams(format!("FPP_H needs p >= 3, got {p}")));
    }
    let genus = 1 + (p as i128) * ((p as i128) + 3) / 2;
    let square = (p as i128) * (p as i128);
    let mut m = ManifoldClass::new(3, 1)
        .with_spin(Spin::NonSpin)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note("fake projective plane with a marked holomorphic curve");
    add(
        &mut m,
        Surface::new("H", genus, square, SurfaceKind::Symplectic).with_pi1_surjects(true),
    );
    Ok(m)
}

fn x_gg2(g: i64) -> Result<ManifoldClass, OpError> {
    if g < 1 {
        return Err(OpError::BadBlockParams(format!("X_gg2 needs g >= 1, got {g}")));
    }
    let mut m = ManifoldClass::new(BigInt::from(4) * g + 2, -2)
        .with_pi1(Pi1::Trivial)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note(format!("simply connected signature -2 member with chi = {g}"));
    add(&mut m, Surface::new("S", 2, 0, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("S1", g, -1, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("S2", g, -1, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("SG1", g + 1, 0, SurfaceKind::Symplectic));
    meet(&mut m, "S", "S1", 1);
    meet(&mut m, "S", "S2", 1);
    meet(&mut m, "S", "SG1", 1);
    if g >= 2 {
        for id in ["L1", "L2"] {
            add(
                &mut m,
                Surface::new(id, 1, 0, SurfaceKind::Lagrangian)
                    .with_complement_simply_connected(true)
                    .with_symplectic_embeddable(true),
            );
        }
    }
    Ok(m)
}

fn x_gg1(g: i64) -> Result<ManifoldClass, OpError> {
    if g < 1 {
        return Err(OpError::BadBlockParams(format!("X_gg1 needs g >= 1, got {g}")));
    }
    let mut m = ManifoldClass::new(BigInt::from(4) * g + 1, -1)
        .with_pi1(Pi1::Trivial)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note(format!("simply connected signature -1 member with chi = {g}"));
    add(&mut m, Surface::new("S", 2, 0, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("SG1", g + 1, 0, SurfaceKind::Symplectic));
    meet(&mut m, "S", "SG1", 1);
    if g == 1 {
        add(&mut m, Surface::new("E2", 2, -1, SurfaceKind::Symplectic));
        meet(&mut m, "S", "E2", 2);
    }
    Ok(m)
}

fn surgered_pair(n: i64, m: i64, label: &str) -> Result<(), OpError> {
    if n < 2 || m < 1 {
        return Err(OpError::BadBlockParams(format!(
            "{label} needs n >= 2 and m >= 1, got ({n}, {m})"
        )));
    }
    Ok(())
}

fn y_n(n: i64, mult: i64) -> Result<ManifoldClass, OpError> {
    surgered_pair(n, mult, "Y_n")?;
    let mut m = ManifoldClass::new(BigInt::from(4) * n - 4, 0)
        .with_pi1(Pi1::Presented(format!(
            "genus 2 by genus {n} surgery quotient, multiplicity {mult}"
        )))
        .with_symplectic(mult == 1)
        .with_minimal(Minimal::Yes)
        .with_note(format!(
            "surgered product of genus 2 and genus {n} surfaces, multiplicity {mult}"
        ));
    add(&mut m, Surface::new("Sigma2", 2, 0, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("Sigman", n, 0, SurfaceKind::Symplectic));
    meet(&mut m, "Sigma2", "Sigman", 1);
    Ok(m)
}

fn y_n1(n: i64, mult: i64) -> Result<ManifoldClass, OpError> {
    surgered_pair(n, mult, "Y_n1")?;
    let minimal = if mult == 1 { Minimal::Yes } else { Minimal::Unknown };
    let mut m = ManifoldClass::new(0, 0)
        .with_pi1(Pi1::Presented(format!(
            "genus {n} by torus surgery quotient, multiplicity {mult}"
        )))
        .with_symplectic(mult == 1)
        .with_minimal(minimal)
        .with_note(format!(
            "surgered product of a genus {n} surface and a torus, multiplicity {mult}"
        ));
    add(&mut m, Surface::new("Sigman", n, 0, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("T", 1, 0, SurfaceKind::Symplectic));
    meet(&mut m, "Sigman", "T", 1);
    Ok(m)
}

fn z_n(n: i64, mult: i64) -> Result<ManifoldClass, OpError> {
    surgered_pair(n, mult, "Z_n")?;
    let minimal = if mult == 1 { Minimal::Yes } else { Minimal::Unknown };
    let mut m = ManifoldClass::new(BigInt::from(8) * n - 8, 0)
        .with_symplectic(mult == 1)
        .with_minimal(minimal)
        .with_note(format!(
            "surgered product of genus 3 and genus {n} surfaces, multiplicity {mult}"
        ));
    add(&mut m, Surface::new("Sigma3", 3, 0, SurfaceKind::Symplectic));
    add(&mut m, Surface::new("Sigman", n, 0, SurfaceKind::Symplectic));
    meet(&mut m, "Sigma3", "Sigman", 1);
    Ok(m)
}

fn m_n(n: i64) -> Result<ManifoldClass, OpError> {
    if n < 1 {
        return Err(OpError::BadBlockParams(format!("M_n needs n >= 1, got {n}")));
    }
    let mut m = ManifoldClass::new(BigInt::from(3) * n, n)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note(format!("minimal general type member with c1^2 = 9 chi, chi = {n}"));
    if n == 1 {
        m = m.with_b1(2).with_spin(Spin::NonSpin);
    }
    Ok(m)
}

fn mtilde() -> ManifoldClass {
    let mut m = ManifoldClass::new(12, 4)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note("four-sheeted cover of a general type surface with a nodal divisor preimage");
    add(
        &mut m,
        Surface::new("E", 4, -1, SurfaceKind::Symplectic)
            .with_pi1_surjects(true)
            .with_nodes(1),
    );
    m
}

fn m2() -> ManifoldClass {
    let mut m = ManifoldClass::new(6, 2)
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note("unramified double cover whose divisor group lands in an index two subgroup");
    add(
        &mut m,
        Surface::new("E", 4, -1, SurfaceKind::Symplectic).with_nodes(1),
    );
    m
}
