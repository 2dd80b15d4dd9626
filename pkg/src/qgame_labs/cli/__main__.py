from qgame_labs.cli import main

raise SystemExit(main())
