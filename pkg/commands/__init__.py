# Commands module