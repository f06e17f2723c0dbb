# Core toolkit plumbing
