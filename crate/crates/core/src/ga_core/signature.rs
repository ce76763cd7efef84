use std::fmt;
use std::str::FromStr;

use crate::error::MvError;

/// The four real Clifford algebras over three generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    /// e_i² = −1 for all i.
    Cl03,
    /// e_i² = +1 for all i.
    Cl30,
    /// e1² = +1, e2² = e3² = −1.
    Cl12,
    /// e1² = e2² = +1, e3² = −1.
    Cl21,
}

/// Bitmask of each basis blade in storage order `[1, e1, e2, e3, e12, e13, e23, e123]`.
pub(crate) const BLADE_MASK: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];
/// Storage index of each bitmask (the permutation is its own inverse).
const MASK_INDEX: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

/// `TABLE[i][j] = (k, sign)` means `blade_i * blade_j = sign * blade_k`.
pub(crate) type ProductTable = [[(u8, i8); 8]; 8];

const fn reorder_sign(a: usize, b: usize) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

const fn build_table(squares: [i8; 3]) -> ProductTable {
    let mut table = [[(0u8, 0i8); 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            let ma = BLADE_MASK[i];
            let mb = BLADE_MASK[j];
            let mut sign = reorder_sign(ma, mb);
            let common = ma & mb;
            let mut k = 0;
            while k < 3 {
                if common & (1 << k) != 0 {
                    sign *= squares[k];
                }
                k += 1;
            }
            table[i][j] = (MASK_INDEX[ma ^ mb] as u8, sign);
            j += 1;
        }
        i += 1;
    }
    table
}

static TABLE_CL03: ProductTable = build_table([-1, -1, -1]);
static TABLE_CL30: ProductTable = build_table([1, 1, 1]);
static TABLE_CL12: ProductTable = build_table([1, -1, -1]);
static TABLE_CL21: ProductTable = build_table([1, 1, -1]);

impl Signature {
    pub const ALL: [Signature; 4] = [Signature::Cl03, Signature::Cl30, Signature::Cl12, Signature::Cl21];

    /// Squares of (e1, e2, e3).
    pub const fn squares(self) -> [i8; 3] {
        match self {
            Signature::Cl03 => [-1, -1, -1],
            Signature::Cl30 => [1, 1, 1],
            Signature::Cl12 => [1, -1, -1],
            Signature::Cl21 => [1, 1, -1],
        }
    }

    /// Square of e_i (i in 1..=3).
    pub fn vector_square(self, i: usize) -> f64 {
        f64::from(self.squares()[i - 1])
    }

    /// Square of e_ij, which is −s_i·s_j.
    pub fn bivector_square(self, i: usize, j: usize) -> f64 {
        -self.vector_square(i) * self.vector_square(j)
    }

    /// I² = −s1·s2·s3.
    pub fn pseudoscalar_square(self) -> f64 {
        let [a, b, c] = self.squares();
        -f64::from(a * b * c)
    }

    pub fn name(self) -> &'static str {
        match self {
            Signature::Cl03 => "cl03",
            Signature::Cl30 => "cl30",
            Signature::Cl12 => "cl12",
            Signature::Cl21 => "cl21",
        }
    }

    pub(crate) fn table(self) -> &'static ProductTable {
        match self {
            Signature::Cl03 => &TABLE_CL03,
            Signature::Cl30 => &TABLE_CL30,
            Signature::Cl12 => &TABLE_CL12,
            Signature::Cl21 => &TABLE_CL21,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q] = match self {
            Signature::Cl03 => [0, 3],
            Signature::Cl30 => [3, 0],
            Signature::Cl12 => [1, 2],
            Signature::Cl21 => [2, 1],
        };
        write!(f, "Cl({p},{q})")
    }
}

impl FromStr for Signature {
    type Err = MvError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        match key.to_ascii_lowercase().as_str() {
            "cl03" => Ok(Signature::Cl03),
            "cl30" => Ok(Signature::Cl30),
            "cl12" => Ok(Signature::Cl12),
            "cl21" => Ok(Signature::Cl21),
            _ => Err(MvError::Usage(format!("unknown algebra `{s}` (expected cl03, cl30, cl12 or cl21)"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_and_pseudoscalar() {
        assert_eq!(Signature::Cl03.pseudoscalar_square(), 1.0);
        assert_eq!(Signature::Cl30.pseudoscalar_square(), -1.0);
        assert_eq!(Signature::Cl12.pseudoscalar_square(), -1.0);
        assert_eq!(Signature::Cl21.pseudoscalar_square(), 1.0);
        assert_eq!(Signature::Cl12.bivector_square(1, 2), 1.0);
        assert_eq!(Signature::Cl12.bivector_square(2, 3), -1.0);
        assert_eq!(Signature::Cl21.bivector_square(1, 2), -1.0);
        assert_eq!(Signature::Cl21.bivector_square(1, 3), 1.0);
    }

    #[test]
    fn table_matches_hand_products() {
        // Hand-written products in Cl(3,0): e1e2 = e12, e2e1 = −e12, e12e23 = e13,
        // e23e12 = −e13, e123e123 = −1, e1e23 = e123, e13e2 = −e123.
        let t = Signature::Cl30.table();
        assert_eq!(t[1][2], (4, 1));
        assert_eq!(t[2][1], (4, -1));
        assert_eq!(t[4][6], (5, 1));
        assert_eq!(t[6][4], (5, -1));
        assert_eq!(t[7][7], (0, -1));
        assert_eq!(t[1][6], (7, 1));
        assert_eq!(t[5][2], (7, -1));
        // Cl(0,3): e12e12 = −1, e1e1 = −1, e123e123 = +1, e3e12 = e123.
        let t = Signature::Cl03.table();
        assert_eq!(t[4][4], (0, -1));
        assert_eq!(t[1][1], (0, -1));
        assert_eq!(t[7][7], (0, 1));
        assert_eq!(t[3][4], (7, 1));
        // Cl(2,1): e13e13 = +1, e3e3 = −1.
        let t = Signature::Cl21.table();
        assert_eq!(t[5][5], (0, 1));
        assert_eq!(t[3][3], (0, -1));
    }

    #[test]
    fn parse_names() {
        assert_eq!("Cl(3,0)".parse::<Signature>().unwrap(), Signature::Cl30);
        assert_eq!("cl21".parse::<Signature>().unwrap(), Signature::Cl21);
        assert!("cl22".parse::<Signature>().is_err());
        for s in Signature::ALL {
            assert_eq!(s.to_string().parse::<Signature>().unwrap(), s);
        }
    }
}
