pub use antiaffine as core_lib;
