//! Monoids of ideals of polynomial rings: staircases, the ideal families,
//! identity verification, atom certification and length-set certificates.

pub mod arithmetic;
pub mod certify;
pub mod families;
pub mod identities;
pub mod staircase;

pub use arithmetic::{
    check_not_transfer_krull, factorization_of_length, ideal_elasticity_construct, non_ff_witness,
    not_transfer_krull_witness, search_length_set, theorem51_lengths, u2_witnesses, AtomStore,
    IdealElastic, LengthCertificate, NonFfWitness, NotTransferKrull, SearchOutcome, U2Witness,
};
pub use certify::{certify_atom, recheck_certificate, AtomCertificate, Verdict};
pub use families::IdealFamily;
pub use identities::{
    identity_suite, recheck_identity, verify_family_identity, verify_product, IdentityRecord,
};
pub use staircase::{staircase_lengths, Staircase, StaircaseMonoid};
