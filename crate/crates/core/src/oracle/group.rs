use super::OracleError;

/// `[[a, b], [c, d]]` with entries in `0..p`.
pub type Mat2 = [u32; 4];

/// `SL2(F_p)` enumerated in lexicographic order of `(a, b, c, d)`.
#[derive(Debug, Clone)]
pub struct GroupTable {
    p: u32,
    elements: Vec<Mat2>,
    // p^4 slots; u32::MAX where the matrix is not in the group
    lookup: Vec<u32>,
    inv: Vec<u32>,
    trace: Vec<u32>,
    class_of: Vec<u32>,
    class_reps: Vec<u32>,
    class_sizes: Vec<u64>,
    id_index: usize,
    neg_id_index: usize,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

// keeps the p^4 lookup and the O(|G|^2) commutator pass at desk scale
const MAX_PRIME: u32 = 31;

pub fn build_group(p: u32) -> Result<GroupTable, OracleError> {
    if p == 2 || !is_prime(p) {
        return Err(OracleError::NotOddPrime(p));
    }
    if p > MAX_PRIME {
        return Err(OracleError::PrimeTooLarge(p));
    }
    let mut elements = Vec::with_capacity((p * (p * p - 1)) as usize);
    let mut lookup = vec![u32::MAX; (p as usize).pow(4)];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % p) % p == 1 {
                        lookup[encode(p, [a, b, c, d])] = elements.len() as u32;
                        elements.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let find = |m: Mat2| lookup[encode(p, m)] as usize;
    let inv = elements
        .iter()
        .map(|&[a, b, c, d]| find([d, (p - b) % p, (p - c) % p, a]) as u32)
        .collect();
    let trace = elements.iter().map(|m| (m[0] + m[3]) % p).collect();
    let id_index = find([1, 0, 0, 1]);
    let neg_id_index = find([p - 1, 0, 0, p - 1]);
    let mut t = GroupTable {
        p,
        elements,
        lookup,
        inv,
        trace,
        class_of: Vec::new(),
        class_reps: Vec::new(),
        class_sizes: Vec::new(),
        id_index,
        neg_id_index,
    };
    t.compute_classes();
    Ok(t)
}

fn encode(p: u32, m: Mat2) -> usize {
    let p = p as usize;
    ((m[0] as usize * p + m[1] as usize) * p + m[2] as usize) * p + m[3] as usize
}

impl GroupTable {
    fn compute_classes(&mut self) {
        let n = self.len();
        let mut class_of = vec![u32::MAX; n];
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = self.class_reps.len() as u32;
            self.class_reps.push(x as u32);
            let mut size = 0;
            for g in 0..n {
                let y = self.mul(self.mul(g, x), self.inv(g));
                if class_of[y] == u32::MAX {
                    class_of[y] = c;
                    size += 1;
                }
            }
            self.class_sizes.push(size);
        }
        self.class_of = class_of;
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Mat2 {
        self.elements[i]
    }

    pub fn index_of(&self, m: Mat2) -> Option<usize> {
        if m.iter().any(|&x| x >= self.p) {
            return None;
        }
        match self.lookup[encode(self.p, m)] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.p;
        let [a, b, c, d] = self.elements[i];
        let [e, f, g, h] = self.elements[j];
        let m = [(a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p];
        self.lookup[encode(p, m)] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// Trace as a residue in `0..p`.
    pub fn trace(&self, i: usize) -> u32 {
        self.trace[i]
    }

    pub fn id_index(&self) -> usize {
        self.id_index
    }

    pub fn neg_id_index(&self) -> usize {
        self.neg_id_index
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.class_reps[c] as usize
    }

    pub fn class_size(&self, c: usize) -> u64 {
        self.class_sizes[c]
    }

    /// `A B A^-1 B^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(build_group(3).unwrap().len(), 24);
        assert_eq!(build_group(5).unwrap().len(), 120);
        assert_eq!(build_group(7).unwrap().len(), 336);
    }

    #[test]
    fn rejects_bad_primes() {
        for p in [0, 1, 2, 4, 9, 15] {
            assert_eq!(build_group(p).unwrap_err(), OracleError::NotOddPrime(p));
        }
    }

    #[test]
    fn structure() {
        let t = build_group(5).unwrap();
        assert_ne!(t.id_index(), t.neg_id_index());
        assert_eq!(t.element(t.id_index()), [1, 0, 0, 1]);
        for i in 0..t.len() {
            assert_eq!(t.mul(i, t.inv(i)), t.id_index());
            assert_eq!(t.mul(t.inv(i), i), t.id_index());
        }
        // lexicographic enumeration
        assert!(t.elements().windows(2).all(|w| w[0] < w[1]));
        // SL2(F_p) has p + 4 conjugacy classes
        assert_eq!(t.class_count(), 9);
        assert_eq!((0..t.class_count()).map(|c| t.class_size(c)).sum::<u64>(), 120);
    }

    #[test]
    fn associativity_sampled() {
        let t = build_group(7).unwrap();
        let n = t.len();
        for k in 0..500 {
            let (a, b, c) = ((k * 7919) % n, (k * 104729 + 3) % n, (k * 1299709 + 11) % n);
            assert_eq!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
        }
    }
}
