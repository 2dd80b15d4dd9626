green_dot = "\U0001F7E2"
yellow_dot = "\U0001F7E1"
red_dot = "\U0001F534"
in_progress = "⌛"
checked = "☑"
unchecked = "☐"
bullet = "•"
warning = "⚠️"
player_icon = "♟"
basis_icon = "⊞"
operator_icon = "⊗"
