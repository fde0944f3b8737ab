from seqcm.cli import main

raise SystemExit(main())
