//! Cell-centered axisymmetric grid (r, z).

#[derive(Debug, Clone, PartialEq)]
pub struct AxiGrid {
    pub nr: usize,
    pub nz: usize,
    pub dr: f64,
    pub dz: f64,
    pub radius: f64,
    pub height: f64,
}

impl AxiGrid {
    pub fn new(nr: usize, nz: usize, radius: f64, height: f64) -> Self {
        assert!(nr >= 1 && nz >= 1);
        AxiGrid {
            nr,
            nz,
            dr: radius / nr as f64,
            dz: height / nz as f64,
            radius,
            height,
        }
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.nr + i
    }

    /// Radius of cell center i.
    #[inline]
    pub fn r_center(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.dr
    }

    /// Radius of the face between cells i-1 and i (face 0 is the axis).
    #[inline]
    pub fn r_face(&self, i: usize) -> f64 {
        i as f64 * self.dr
    }

    pub fn n_cells(&self) -> usize {
        self.nr * self.nz
    }

    /// Volume-weight of cell (i, j) for radial averaging: proportional to
    /// the cell-center radius (uniform spacing cancels the rest).
    #[inline]
    pub fn weight(&self, i: usize) -> f64 {
        self.r_center(i)
    }

    /// Volume-weighted mean of a cell field.
    pub fn weighted_mean(&self, field: &[f64]) -> f64 {
        debug_assert_eq!(field.len(), self.n_cells());
        let mut num = 0.0;
        let mut den = 0.0;
        for j in 0..self.nz {
            for i in 0..self.nr {
                let w = self.weight(i);
                num += w * field[self.idx(i, j)];
                den += w;
            }
        }
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_matches_extent() {
        let g = AxiGrid::new(25, 50, 0.025, 0.050);
        assert!((g.dr - 1.0e-3).abs() < 1e-15);
        assert!((g.dz - 1.0e-3).abs() < 1e-15);
        assert!((g.nr as f64 * g.dr - g.radius).abs() < 1e-15);
        assert!((g.nz as f64 * g.dz - g.height).abs() < 1e-15);
    }

    #[test]
    fn weighted_mean_of_constant_is_constant() {
        let g = AxiGrid::new(25, 50, 0.025, 0.050);
        let field = vec![7.5; g.n_cells()];
        assert!((g.weighted_mean(&field) - 7.5).abs() < 1e-12);
    }

    #[test]
    fn weighted_mean_favors_outer_cells() {
        let g = AxiGrid::new(10, 1, 0.01, 0.01);
        // Field rising with radius: the volume mean exceeds the plain mean.
        let field: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let plain: f64 = field.iter().sum::<f64>() / 10.0;
        assert!(g.weighted_mean(&field) > plain);
    }
}
