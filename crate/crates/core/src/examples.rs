//! Embedded presentations of the worked example: `Λ = k[x]/(x³)`, the
//! endomorphism algebras `A = End_Λ(Λ ⊕ X)` and `B = End_Λ(Λ ⊕ Y)`, and their
//! mirror-reflective algebras at the vertex-1 idempotent.
//!
//! `gamma*beta` (and its barred copy) is listed explicitly: it vanishes in
//! `End_Λ(Λ ⊕ X)` but does not follow from the other relations.

use crate::field::FieldSpec;
use crate::quiver::{parse_presentation, Presentation};

pub const LAMBDA: &str = "\
field Q
vertex v1
arrow x v1 v1
relations
x^3
end
";

pub const A: &str = "\
field Q
vertex v1
vertex v2
arrow gamma v1 v1
arrow beta v1 v2
arrow alpha v2 v1
relations
alpha*beta
alpha*gamma
gamma^2 = beta*alpha
gamma*beta
end
";

pub const B: &str = "\
field Q
vertex v1
vertex v2
arrow beta v1 v2
arrow alpha v2 v1
relations
alpha*beta*alpha*beta
end
";

pub const R_A: &str = "\
field Q
vertex v1
vertex v2
vertex v1b
arrow gamma v1 v1
arrow beta v1 v2
arrow alpha v2 v1
arrow alphab v2 v1b
arrow betab v1b v2
arrow gammab v1b v1b
relations
beta*alphab
betab*alpha
alpha*gamma
alphab*gammab
gamma^2 = beta*alpha
gammab^2 = betab*alphab
alpha*beta + alphab*betab
gamma*beta
gammab*betab
end
";

pub const R_B: &str = "\
field Q
vertex v1
vertex v2
vertex v1b
arrow beta v1 v2
arrow alpha v2 v1
arrow alphab v2 v1b
arrow betab v1b v2
relations
beta*alphab
betab*alpha
alpha*beta*alpha*beta + alphab*betab*alphab*betab
end
";

/// Path algebra of `1 → 2`.
pub const LINE: &str = "\
field Q
vertex v1
vertex v2
arrow a v1 v2
relations
end
";

/// Parses an embedded presentation and sets its field.
pub fn presentation(text: &str, field: FieldSpec) -> Presentation {
    parse_presentation(text).expect("embedded presentation parses").with_field(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::quiver::PathAlgebra;

    #[test]
    fn example_dimensions() {
        for (text, dim) in [(LAMBDA, 3), (A, 6), (B, 9), (R_A, 12), (R_B, 18), (LINE, 3)] {
            let p = presentation(text, FieldSpec::Rationals);
            assert_eq!(PathAlgebra::build(&Rationals, &p, 30).unwrap().algebra.dim(), dim);
            let f = PrimeField::new(2).unwrap();
            let pa = PathAlgebra::build(&f, &p, 30).unwrap();
            assert_eq!(pa.algebra.dim(), dim);
            pa.algebra.check().unwrap();
        }
    }
}
