//! Mirabolic module expressions and their Euler characteristics.

use crate::catalog::{JordanBlock, ReprSpec};
use crate::chars::CharSystem;

use super::Gl2Expr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MirabolicAtom {
    /// `𝕊₂ = (j_!)²(ℂ)`.
    S2,
    /// `j_!i_*(A)`.
    JIStar(Vec<JordanBlock>),
    /// `i_*(B)`; `None` where B is not tabulated (generic Π).
    IStar(Option<Gl2Expr>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MirabolicExpr {
    pub atoms: Vec<MirabolicAtom>,
}

/// The second argument `Y` of `χ(X, Y)`; only its Whittaker multiplicity matters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestModule {
    /// Irreducible principal series `χ₁ × χ₂ ⋊ σ` in generic position.
    GenericPrincipalSeries,
    OneDimensional,
    Irreducible { m_y: u8 },
}

impl TestModule {
    pub fn whittaker_multiplicity(self) -> u8 {
        match self {
            TestModule::GenericPrincipalSeries => 1,
            TestModule::OneDimensional => 0,
            TestModule::Irreducible { m_y } => m_y,
        }
    }

    pub fn label(self) -> String {
        match self {
            TestModule::GenericPrincipalSeries => "generic principal series".into(),
            TestModule::OneDimensional => "one-dimensional".into(),
            TestModule::Irreducible { m_y } => format!("irreducible (m_Y={m_y})"),
        }
    }
}

/// Additive: `𝕊₂` contributes `m_Y`, `j_!i_*(A)` and `i_*(B)` contribute 0.
pub fn euler_char(x: &MirabolicExpr, y: TestModule) -> i64 {
    let m_y = i64::from(y.whittaker_multiplicity());
    x.atoms
        .iter()
        .map(|a| match a {
            MirabolicAtom::S2 => m_y,
            MirabolicAtom::JIStar(_) | MirabolicAtom::IStar(_) => 0,
        })
        .sum()
}

/// `𝕊₂^{m_Π} ⊕ j_!i_*(A) ⊕ i_*(B)`.
pub fn gk_expression(pi: &ReprSpec) -> MirabolicExpr {
    let gk = pi.gk_decomposition();
    let mut atoms: Vec<MirabolicAtom> = (0..gk.m_pi).map(|_| MirabolicAtom::S2).collect();
    atoms.push(MirabolicAtom::JIStar(gk.a));
    atoms.push(MirabolicAtom::IStar(gk.b));
    MirabolicExpr { atoms }
}

impl MirabolicExpr {
    pub fn render(&self, sys: &CharSystem) -> String {
        let parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| match a {
                MirabolicAtom::S2 => "S_2".to_string(),
                MirabolicAtom::JIStar(blocks) => {
                    let inner: Vec<String> = blocks
                        .iter()
                        .map(|b| {
                            let c = sys.render(&b.chi);
                            if b.len == 1 {
                                c
                            } else {
                                format!("{c}^({})", b.len)
                            }
                        })
                        .collect();
                    let inner = if inner.is_empty() { "0".to_string() } else { inner.join(" + ") };
                    format!("j_!i_*({inner})")
                }
                MirabolicAtom::IStar(Some(b)) => format!("i_*({})", b.render(sys)),
                MirabolicAtom::IStar(None) => "i_*(B)".to_string(),
            })
            .collect();
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::Character;

    #[test]
    fn small_cases_by_hand() {
        let x = MirabolicExpr {
            atoms: vec![MirabolicAtom::S2, MirabolicAtom::JIStar(vec![JordanBlock { chi: Character::nu_frac(1, 1), len: 1 }])],
        };
        assert_eq!(euler_char(&x, TestModule::GenericPrincipalSeries), 1);
        assert_eq!(euler_char(&x, TestModule::OneDimensional), 0);
        let a = MirabolicExpr { atoms: vec![MirabolicAtom::JIStar(vec![])] };
        assert_eq!(euler_char(&a, TestModule::Irreducible { m_y: 1 }), 0);
    }
}
