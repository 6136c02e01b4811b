namespace twkit {}
